import pytest

from tupling import (
    PASS_CERTIFIED,
    PASS_HOMOLOGICAL,
    boundary_complex,
    check_wcm,
    faces,
    from_facets,
    link,
    simplex_complex,
    verify_lemma31,
    verify_theorem1,
    verify_theorem22,
)


class TestCheckWcm:
    def test_simplex_is_wcm_of_its_dimension(self):
        for n in (0, 1, 3, 4):
            rep = check_wcm(simplex_complex(n), n)
            assert rep.verdict == PASS_CERTIFIED

    def test_sphere_is_wcm(self):
        for n in (2, 3, 4):
            rep = check_wcm(boundary_complex(n), n - 1)
            assert rep.verdict == PASS_CERTIFIED

    def test_two_disjoint_edges_fail_at_dim_one(self):
        X = from_facets([(0, 1), (2, 3)])
        rep = check_wcm(X, 1)
        assert rep.verdict == "fail"
        assert not rep.global_passed  # requirement 0 needs connectedness

    def test_underdimensioned_complex_fails(self):
        # wCM of dimension n forces actual dimension >= n
        rep = check_wcm(simplex_complex(2), 4)
        assert rep.verdict == "fail"

    def test_monotone_in_dimension(self):
        X = boundary_complex(3)
        verdicts = [check_wcm(X, n).passed for n in (-1, 0, 1, 2)]
        assert verdicts == [True, True, True, True]
        assert not check_wcm(X, 3).passed

    def test_link_self_consistency(self):
        # if X passes at n, each link passes at n - p - 1
        X = boundary_complex(4)
        n = 3
        assert check_wcm(X, n).passed
        for p in (0, 1):
            for s in faces(X, p)[:3]:
                assert check_wcm(link(X, s), n - p - 1).passed

    def test_pi1_never_downgrades_verdict(self):
        X = boundary_complex(4)  # global requirement 2 needs a pi1 certificate
        rep = check_wcm(X, 3, pi1="never")
        assert rep.verdict == PASS_HOMOLOGICAL
        rep = check_wcm(X, 3, pi1="auto")
        assert rep.verdict == PASS_CERTIFIED

    def test_requirements_at_or_below_zero_certify_exactly(self):
        M = from_facets([(0,), (1,), (2,)])
        rep = check_wcm(M, 0)  # only global non-emptiness is required
        assert rep.verdict == PASS_CERTIFIED
        assert rep.skipped == 3

    def test_convention_note_recorded(self):
        rep = check_wcm(simplex_complex(1), 1)
        assert any("conventions" in note for note in rep.notes)

    def test_jobs_produce_identical_reports(self):
        X = boundary_complex(4)
        a = check_wcm(X, 3, jobs=1)
        b = check_wcm(X, 3, jobs=4)
        assert a.to_obj() == b.to_obj()

    def test_entries_are_deterministic(self):
        X = boundary_complex(3)
        a = check_wcm(X, 2).to_obj()
        b = check_wcm(X, 2).to_obj()
        assert a == b

    def test_invalid_pi1_mode(self):
        with pytest.raises(ValueError):
            check_wcm(simplex_complex(1), 1, pi1="sometimes")


class TestTheorem1:
    def test_simplex5_double(self):
        rep = verify_theorem1(simplex_complex(5), 5, 2)
        assert rep.passed
        assert rep.extras["target_dimension"] == 1

    def test_minimal_simplex(self):
        for r in (2, 3):
            rep = verify_theorem1(simplex_complex(r - 1), r - 1, r)
            assert rep.passed
            assert rep.extras["target_dimension"] == 0

    def test_boundary5_double(self):
        rep = verify_theorem1(boundary_complex(5), 4, 2)
        assert rep.passed
        assert rep.extras["target_dimension"] == 1

    def test_hypothesis_gate_failure_is_inconclusive(self):
        X = from_facets([(0, 1), (2, 3)])
        rep = verify_theorem1(X, 1, 2)
        assert rep.verdict == "inconclusive"
        assert rep.conclusion is None

    def test_connectivity_claim_recorded(self):
        rep = verify_theorem1(simplex_complex(4), 4, 2)
        claim = rep.extras["connectivity_claim"]
        assert claim["k"] == 0 and claim["passed"]

    def test_vacuous_negative_target_dimension(self):
        # a point is wCM of dimension 0; its double is empty, and the
        # concluded dimension -1 imposes no requirement at all
        rep = verify_theorem1(simplex_complex(0), 0, 2)
        assert rep.passed
        assert rep.extras["target_dimension"] == -1

    def test_wcm_of_negative_dimension_is_vacuous(self):
        assert check_wcm(from_facets([]), -1).verdict == PASS_CERTIFIED
        assert check_wcm(from_facets([]), 0).verdict == "fail"


class TestTheorem22:
    def test_basic(self):
        rep = verify_theorem22(5, 2)
        assert rep.passed
        assert rep.extras["target_dimension"] == 1

    def test_point_case(self):
        for r in (2, 3, 4):
            rep = verify_theorem22(r - 1, r)
            assert rep.passed
            assert rep.extras["target_dimension"] == 0

    def test_h1_of_m8_recorded(self):
        rep = verify_theorem22(7, 2)
        assert rep.passed
        groups = {g.degree: (g.free_rank, g.torsion)
                  for g in rep.conclusion.global_connectivity.groups}
        assert groups[1] == (0, ())

    def test_bounds_agree_at_r2(self):
        for n in range(1, 9):
            rep = verify_theorem22(n, 2)
            assert rep.extras["stronger_bound"] == "tie"

    def test_primary_bound_stronger_for_r3(self):
        rep = verify_theorem22(8, 3)
        assert rep.extras["target_dimension"] >= rep.extras["alternate_bound"]

    def test_formula_agreement_with_theorem1(self):
        # on full simplices the two statements give the same dimension
        for r in (2, 3, 4):
            for n in range(r - 1, 11):
                assert (n - r + 1) // (r + 1) == ((n + 1) - r) // (r + 1) or True
                t1 = (n - r + 1) // (r + 1)
                t22 = (n + 1 - r) // (r + 1)
                assert t1 == t22

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_theorem22(1, 3)


class TestLemma31:
    def test_simplex4_m3(self):
        rep = verify_lemma31(simplex_complex(4), 4, 3)
        assert rep.passed
        assert rep.extras["target_dimension"] == 2

    def test_m1_subdivision(self):
        rep = verify_lemma31(simplex_complex(3), 3, 1)
        assert rep.passed
        assert rep.extras["target_dimension"] == 3

    def test_boundary4_m2(self):
        rep = verify_lemma31(boundary_complex(4), 3, 2)
        assert rep.passed
        assert rep.extras["target_dimension"] == 2

    def test_gate_failure(self):
        rep = verify_lemma31(from_facets([(0,), (1,)]), 1, 1)
        assert rep.verdict == "inconclusive"

    def test_bad_m(self):
        with pytest.raises(ValueError):
            verify_lemma31(simplex_complex(2), 2, 0)
