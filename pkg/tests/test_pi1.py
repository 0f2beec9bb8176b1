import pytest

from tupling import boundary_complex, from_facets, pi1_triviality, simplex_complex
from tupling.pi1 import edge_path_presentation


class TestPresentation:
    def test_simplex_generators_all_die(self):
        ngens, relators = edge_path_presentation(simplex_complex(3))
        # complete graph on a star tree leaves C(3,2) non-tree edges
        assert ngens == 3
        assert all(len(w) <= 3 for w in relators)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            edge_path_presentation(from_facets([(0, 1), (2, 3)]))


class TestTriviality:
    def test_simplex_trivial(self):
        assert pi1_triviality(simplex_complex(4)) == "trivial-certified"

    def test_two_sphere_trivial(self):
        assert pi1_triviality(boundary_complex(3)) == "trivial-certified"

    def test_four_cycle_nontrivial(self):
        square = from_facets([(0, 1), (1, 2), (2, 3), (0, 3)])
        assert pi1_triviality(square) == "nontrivial-certified"

    def test_projective_plane_nontrivial_via_torsion(self):
        # minimal 6-vertex triangulation; H1 = Z/2 witnesses pi1 != 1
        rp2 = from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
                           (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)])
        from tupling import homology_groups
        assert {g.degree: (g.free_rank, g.torsion) for g in homology_groups(rp2)} \
            == {0: (0, ()), 1: (0, (2,)), 2: (0, ())}
        assert pi1_triviality(rp2) == "nontrivial-certified"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            pi1_triviality(from_facets([]))

    def test_budget_falls_back_to_abelianization(self):
        # with no simplification budget the sphere is still recognized as
        # inconclusive at worst, never wrongly certified
        status = pi1_triviality(boundary_complex(3), max_steps=0)
        assert status in ("inconclusive", "trivial-certified")
