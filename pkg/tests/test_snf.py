import random

import pytest

from tupling import SparseIntMatrix, boundary_complex, rank, rank_mod_p, smith_normal_form
from tupling.homology import boundary_matrix

from oracles import dense_snf


def scramble_unimodular(dense, rng, ops=30):
    """Apply random unimodular row/column operations to a dense matrix."""
    m = [list(r) for r in dense]
    R, C = len(m), len(m[0])
    for _ in range(ops):
        kind = rng.randrange(4)
        if kind == 0 and R > 1:
            i, k = rng.sample(range(R), 2)
            c = rng.choice([-2, -1, 1, 2])
            for j in range(C):
                m[i][j] += c * m[k][j]
        elif kind == 1 and C > 1:
            j, l = rng.sample(range(C), 2)
            c = rng.choice([-2, -1, 1, 2])
            for i in range(R):
                m[i][j] += c * m[i][l]
        elif kind == 2 and R > 1:
            i, k = rng.sample(range(R), 2)
            m[i], m[k] = m[k], m[i]
        else:
            i = rng.randrange(R)
            for j in range(C):
                m[i][j] = -m[i][j]
    return m


def random_sparse(rng, nrows=20, ncols=20, fill=0.15, lo=-4, hi=4):
    return [[rng.randint(lo, hi) if rng.random() < fill else 0
             for _ in range(ncols)] for _ in range(nrows)]


class TestSmithNormalForm:
    def test_identity(self):
        M = SparseIntMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert smith_normal_form(M) == (1, 1, 1)

    def test_elementary_diagonal(self):
        M = SparseIntMatrix.from_dense([[2, 0], [0, 3]])
        assert smith_normal_form(M) == (1, 6)

    def test_boundary_of_tetrahedron_shell(self):
        # the degree-2 boundary of the 2-sphere on 4 vertices: rank 3, no torsion
        M = boundary_matrix(boundary_complex(3), 2)
        assert (M.nrows, M.ncols) == (6, 4)
        assert smith_normal_form(M) == (1, 1, 1)

    def test_zero_matrix(self):
        assert smith_normal_form(SparseIntMatrix(4, 5)) == ()

    def test_divisibility_chain(self):
        M = SparseIntMatrix.from_dense([[2, 0, 0], [0, 6, 0], [0, 0, 10]])
        factors = smith_normal_form(M)
        assert factors == (2, 2, 30)
        assert dense_snf(M.to_dense()) == factors

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_dense_oracle(self, seed):
        rng = random.Random(seed)
        dense = random_sparse(rng, nrows=8, ncols=10, fill=0.3)
        M = SparseIntMatrix.from_dense(dense)
        assert smith_normal_form(M) == dense_snf(dense)

    @pytest.mark.parametrize("seed", range(6))
    def test_unimodular_invariance(self, seed):
        rng = random.Random(1000 + seed)
        dense = random_sparse(rng)
        factors = smith_normal_form(SparseIntMatrix.from_dense(dense))
        scrambled = scramble_unimodular(dense, rng)
        assert smith_normal_form(SparseIntMatrix.from_dense(scrambled)) == factors

    @pytest.mark.parametrize("seed", range(4))
    def test_large_entries_match_oracle(self, seed):
        # no unit pivots at all: the gcd phase carries the whole reduction
        rng = random.Random(3000 + seed)
        dense = [[rng.choice([0, 0, rng.randint(-90, 90) * 2])
                  for _ in range(9)] for _ in range(7)]
        M = SparseIntMatrix.from_dense(dense)
        assert smith_normal_form(M) == dense_snf(dense)

    def test_entry_budget_guard(self):
        import pytest as _pytest

        from tupling import BudgetExceededError
        rng = random.Random(7)
        dense = random_sparse(rng, nrows=12, ncols=12, fill=0.6)
        with _pytest.raises(BudgetExceededError):
            smith_normal_form(SparseIntMatrix.from_dense(dense), entry_budget=3)


class TestRanks:
    def test_rank(self):
        M = SparseIntMatrix.from_dense([[1, 2], [2, 4], [0, 1]])
        assert rank(M) == 2

    def test_rank_mod_p_drops_on_torsion_prime(self):
        M = SparseIntMatrix.from_dense([[3, 0], [0, 1]])
        assert rank_mod_p(M, 2) == 2
        assert rank_mod_p(M, 3) == 1

    @pytest.mark.parametrize("seed", range(8))
    def test_rank_mod_p_matches_snf(self, seed):
        rng = random.Random(2000 + seed)
        dense = random_sparse(rng, nrows=9, ncols=7, fill=0.35)
        M = SparseIntMatrix.from_dense(dense)
        factors = smith_normal_form(M)
        for p in (2, 3, 5):
            expected = sum(1 for f in factors if f % p)
            assert rank_mod_p(M, p) == expected

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            rank_mod_p(SparseIntMatrix(1, 1), 1)


class TestMatrixOps:
    def test_matmul(self):
        A = SparseIntMatrix.from_dense([[1, 2], [0, 1]])
        B = SparseIntMatrix.from_dense([[1, 0], [3, -1]])
        assert (A @ B).to_dense() == [[7, -2], [3, -1]]

    def test_matmul_shape_mismatch(self):
        with pytest.raises(ValueError):
            SparseIntMatrix(2, 3) @ SparseIntMatrix(2, 3)

    def test_entries_accumulate(self):
        M = SparseIntMatrix.from_entries(1, 1, [(0, 0, 1), (0, 0, -1)])
        assert M.is_zero

    def test_transpose(self):
        M = SparseIntMatrix.from_dense([[1, 2, 0], [0, 0, 3]])
        assert M.transpose().to_dense() == [[1, 0], [2, 0], [0, 3]]
