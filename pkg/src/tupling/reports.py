"""Verdict vocabulary shared by every verification harness.

"pass-certified" means the claim was established exactly (combinatorial
identity, or homology plus a fundamental-group certificate); the weaker
"pass-homological" records that some connectivity requirement above
degree zero was only verified through integral homology.  The two are
propagated, never collapsed.
"""

PASS_CERTIFIED = "pass-certified"
PASS_HOMOLOGICAL = "pass-homological"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
BUDGET_EXCEEDED = "budget-exceeded"

_ORDER = [PASS_CERTIFIED, PASS_HOMOLOGICAL, INCONCLUSIVE, BUDGET_EXCEEDED, FAIL]


def is_pass(verdict: str) -> bool:
    return verdict in (PASS_CERTIFIED, PASS_HOMOLOGICAL)


def combine(*verdicts: str) -> str:
    """Weakest verdict wins; fail dominates everything."""
    if not verdicts:
        return PASS_CERTIFIED
    return max(verdicts, key=_ORDER.index)


def exit_code(verdict: str) -> int:
    if is_pass(verdict):
        return 0
    if verdict == FAIL:
        return 1
    return 2
