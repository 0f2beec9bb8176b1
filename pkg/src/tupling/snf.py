"""Exact sparse integer linear algebra: Smith normal form and ranks.

Entries are Python ints, so elimination never overflows.  Matrices are
stored as dict-of-dict rows; the reduction keeps a synchronized column
index.  Pivoting is Markowitz-style: unit entries in the lowest-support
column first, breaking ties toward low-support rows, which is what keeps
fill-in tolerable on boundary matrices.  Only invariant factors are
produced (no transform tracking), which lets a unit pivot clear its row
for free once its column is eliminated.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

from .budget import BudgetExceededError, get_limit


class SparseIntMatrix:
    """Immutable-by-convention sparse integer matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def from_entries(cls, nrows: int, ncols: int,
                     entries: Iterable[tuple]) -> "SparseIntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            if v:
                row = rows.setdefault(i, {})
                row[j] = row.get(j, 0) + v
                if not row[j]:
                    del row[j]
        return cls(nrows, ncols, {i: r for i, r in rows.items() if r})

    @classmethod
    def from_dense(cls, dense: list) -> "SparseIntMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        return cls.from_entries(
            nrows, ncols,
            ((i, j, v) for i, row in enumerate(dense) for j, v in enumerate(row)))

    def entry(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return SparseIntMatrix(self.ncols, self.nrows, rows)

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        rows: dict[int, dict[int, int]] = {}
        for i, row in self.rows.items():
            acc: dict[int, int] = {}
            for j, v in row.items():
                brow = other.rows.get(j)
                if not brow:
                    continue
                for k, w in brow.items():
                    acc[k] = acc.get(k, 0) + v * w
            acc = {k: w for k, w in acc.items() if w}
            if acc:
                rows[i] = acc
        return SparseIntMatrix(self.nrows, other.ncols, rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseIntMatrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def _xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) > 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class _Eliminator:
    """Working state for one Smith reduction: synchronized row/col dicts."""

    def __init__(self, matrix: SparseIntMatrix, entry_budget: int):
        self.rows: dict[int, dict[int, int]] = {
            i: dict(r) for i, r in matrix.rows.items() if r}
        self.cols: dict[int, dict[int, int]] = {}
        self.nnz = 0
        for i, r in self.rows.items():
            for j, v in r.items():
                self.cols.setdefault(j, {})[i] = v
                self.nnz += 1
        self.budget = entry_budget

    def _guard(self):
        if self.nnz > self.budget:
            raise BudgetExceededError("matrix-entries", self.budget)

    def set_entry(self, i: int, j: int, v: int):
        row = self.rows.get(i)
        had = row is not None and j in row
        if v:
            if row is None:
                row = self.rows[i] = {}
            row[j] = v
            self.cols.setdefault(j, {})[i] = v
            if not had:
                self.nnz += 1
        elif had:
            del row[j]
            if not row:
                del self.rows[i]
            col = self.cols[j]
            del col[i]
            if not col:
                del self.cols[j]
            self.nnz -= 1

    def add_row(self, k: int, i: int, c: int):
        """row_k += c * row_i."""
        for j, v in list(self.rows[i].items()):
            self.set_entry(k, j, self.rows.get(k, {}).get(j, 0) + c * v)
        self._guard()

    def add_col(self, l: int, j: int, c: int):
        """col_l += c * col_j."""
        for i, v in list(self.cols[j].items()):
            self.set_entry(i, l, self.rows.get(i, {}).get(l, 0) + c * v)
        self._guard()

    def combine_rows(self, i: int, k: int, j: int):
        """Unimodular 2-row transform putting gcd at (i, j) and 0 at (k, j)."""
        a = self.rows[i][j]
        b = self.rows[k][j]
        g, x, y = _xgcd(a, b)
        u, w = a // g, b // g
        touched = set(self.rows[i]) | set(self.rows.get(k, {}))
        for col in sorted(touched):
            va = self.rows.get(i, {}).get(col, 0)
            vb = self.rows.get(k, {}).get(col, 0)
            self.set_entry(i, col, x * va + y * vb)
            self.set_entry(k, col, -w * va + u * vb)
        self._guard()

    def combine_cols(self, j: int, l: int, i: int):
        """Unimodular 2-column transform putting gcd at (i, j) and 0 at (i, l)."""
        a = self.rows[i][j]
        b = self.rows[i][l]
        g, x, y = _xgcd(a, b)
        u, w = a // g, b // g
        touched = set(self.cols[j]) | set(self.cols.get(l, {}))
        for row in sorted(touched):
            va = self.rows.get(row, {}).get(j, 0)
            vb = self.rows.get(row, {}).get(l, 0)
            self.set_entry(row, j, x * va + y * vb)
            self.set_entry(row, l, -w * va + u * vb)
        self._guard()

    def drop_pivot(self, i: int, j: int):
        """Remove an isolated pivot's row and column from the working matrix."""
        for l in list(self.rows.get(i, {})):
            self.set_entry(i, l, 0)
        for k in list(self.cols.get(j, {})):
            self.set_entry(k, j, 0)

    def find_unit_pivot(self):
        for j in sorted(self.cols, key=lambda c: (len(self.cols[c]), c)):
            col = self.cols[j]
            best = None
            for i, v in col.items():
                if v == 1 or v == -1:
                    cand = (len(self.rows[i]), i)
                    if best is None or cand < best:
                        best = cand
            if best is not None:
                return best[1], j
        return None

    def min_abs_entry(self):
        best = None
        for i in self.rows:
            for j, v in self.rows[i].items():
                cand = (abs(v), i, j)
                if best is None or cand < best:
                    best = cand
        return best[1], best[2]


def smith_normal_form(matrix: SparseIntMatrix, *,
                      entry_budget: int | None = None) -> tuple:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Only the nonzero factors are returned (their count is the rank).  The
    pivot policy is deterministic, so identical inputs give identical
    reductions on every platform.
    """
    if entry_budget is None:
        entry_budget = get_limit("matrix-entries")
    e = _Eliminator(matrix, entry_budget)
    diag: list[int] = []

    # phase 1: unit pivots; clearing the pivot column makes the pivot row
    # removable for free because column operations against a unit column
    # touch nothing outside the pivot row.
    while e.nnz:
        pivot = e.find_unit_pivot()
        if pivot is None:
            break
        i, j = pivot
        v = e.rows[i][j]
        for k in sorted(set(e.cols[j]) - {i}):
            e.add_row(k, i, -e.rows[k][j] * v)
        e.drop_pivot(i, j)
        diag.append(1)

    # phase 2: no unit entries remain; classic gcd elimination on the
    # (typically tiny) residual matrix.
    while e.nnz:
        i, j = e.min_abs_entry()
        while True:
            col_others = [k for k in e.cols[j] if k != i]
            if col_others:
                k = min(col_others)
                a, b = e.rows[i][j], e.rows[k][j]
                if b % a == 0:
                    e.add_row(k, i, -(b // a))
                else:
                    e.combine_rows(i, k, j)
                continue
            row_others = [l for l in e.rows[i] if l != j]
            if row_others:
                l = min(row_others)
                a, b = e.rows[i][j], e.rows[i][l]
                if b % a == 0:
                    e.add_col(l, j, -(b // a))
                else:
                    e.combine_cols(j, l, i)
                continue
            break
        diag.append(abs(e.rows[i][j]))
        e.drop_pivot(i, j)

    return _divisibility_chain(diag)


def _divisibility_chain(diag: list) -> tuple:
    """Normalize a diagonal to the invariant-factor chain d1 | d2 | ..."""
    d = [abs(x) for x in diag if x]
    changed = True
    while changed:
        changed = False
        for a in range(len(d)):
            for b in range(a + 1, len(d)):
                if d[b] % d[a]:
                    g = gcd(d[a], d[b])
                    d[a], d[b] = g, d[a] * d[b] // g
                    changed = True
    return tuple(sorted(d))


def rank(matrix: SparseIntMatrix, *,
         entry_budget: int | None = None) -> int:
    """Rank over the rationals (count of nonzero invariant factors)."""
    return len(smith_normal_form(matrix, entry_budget=entry_budget))


def rank_mod_p(matrix: SparseIntMatrix, p: int) -> int:
    """Rank over the finite field with p elements (p prime)."""
    if p < 2:
        raise ValueError("modulus must be a prime >= 2")
    rows = {}
    for i, r in matrix.rows.items():
        nr = {j: v % p for j, v in r.items() if v % p}
        if nr:
            rows[i] = nr
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    rk = 0
    for j in sorted(cols, key=lambda c: (len(cols[c]), c)):
        live = cols.get(j)
        if not live:
            continue
        i = min(live, key=lambda r: (len(rows[r]), r))
        inv = pow(rows[i][j], p - 2, p)
        for k in sorted(live - {i}):
            c = (rows[k][j] * inv) % p
            rk_row = rows[k]
            for l, v in rows[i].items():
                nv = (rk_row.get(l, 0) - c * v) % p
                if nv:
                    rk_row[l] = nv
                    cols.setdefault(l, set()).add(k)
                elif l in rk_row:
                    del rk_row[l]
                    cols[l].discard(k)
            if not rk_row:
                del rows[k]
        for l in list(rows[i]):
            cols[l].discard(i)
        del rows[i]
        cols.pop(j, None)
        rk += 1
    return rk
