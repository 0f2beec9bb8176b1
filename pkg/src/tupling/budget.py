"""Resource guards shared across the package.

Combinatorial constructions here blow up quickly (tuplings, order
complexes, ordered covers), so every enumeration and every matrix
reduction runs under an explicit budget.  Exceeding a budget raises
:class:`BudgetExceededError`, which is a reported condition, never a
silent truncation.
"""

DEFAULT_SIMPLEX_BUDGET = 5_000_000
DEFAULT_VERTEX_ID_CAP = 65_536
DEFAULT_ENTRY_BUDGET = 50_000_000
DEFAULT_ISO_NODE_BUDGET = 500_000
DEFAULT_TIETZE_STEPS = 50_000
DEFAULT_TIETZE_LENGTH = 2_000_000

# process-wide defaults, overridable from the command line; an explicit
# keyword argument at a call site always wins over these
_limits = {
    "simplices": DEFAULT_SIMPLEX_BUDGET,
    "matrix-entries": DEFAULT_ENTRY_BUDGET,
    "iso-nodes": DEFAULT_ISO_NODE_BUDGET,
    "tietze-steps": DEFAULT_TIETZE_STEPS,
    "tietze-length": DEFAULT_TIETZE_LENGTH,
}


def get_limit(kind: str) -> int:
    return _limits[kind]


def set_limit(kind: str, value: int) -> None:
    if kind not in _limits:
        raise KeyError(f"unknown budget kind {kind!r}")
    if value < 1:
        raise ValueError("budget limits must be positive")
    _limits[kind] = value


class BudgetExceededError(RuntimeError):
    """A combinatorial or algebraic resource budget was exhausted.

    Carries the budget kind, the configured limit and, when the producer
    can supply one, the partial result computed before the limit was hit.
    """

    def __init__(self, kind, limit, message=None, partial=None):
        super().__init__(message or f"{kind} budget exceeded (limit {limit})")
        self.kind = kind
        self.limit = limit
        self.partial = partial
