"""Reduced integral simplicial homology and homological connectivity.

All homology is computed over the integers through Smith normal form;
the augmentation (the empty simplex in degree -1) is always included, so
every group reported here is reduced.  Connectivity queries walk degrees
bottom-up and stop at the first nonvanishing group, with a union-find
shortcut in degree zero.

Connectivity conventions for degenerate cases, used consistently across
every verification harness: every complex is (-2)-connected; a complex
is (-1)-connected exactly when non-empty; 0-connected exactly when
non-empty and path-connected.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .complexes import SimplicialComplex, f_vector, faces
from .snf import SparseIntMatrix, smith_normal_form

PI1_TRIVIAL = "trivial-certified"
PI1_NONTRIVIAL = "nontrivial-certified"
PI1_INCONCLUSIVE = "inconclusive"
PI1_NOT_ATTEMPTED = "not-attempted"


@dataclass(frozen=True)
class HomologyGroup:
    """One reduced homology group: free rank plus invariant-factor torsion."""

    degree: int
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_obj(self) -> dict:
        return {"degree": self.degree, "free_rank": self.free_rank,
                "torsion": list(self.torsion)}


@dataclass(frozen=True)
class ConnectivityReport:
    """Homological connectivity of one complex.

    ``connectivity`` is the largest k with the complex non-empty and all
    reduced homology vanishing through degree k; it is capped at the
    dimension when everything vanishes (``acyclic`` distinguishes that
    case, where the complex is homologically k-connected for every k).
    """

    connectivity: int
    acyclic: bool
    groups: tuple = ()
    pi1_status: str = PI1_NOT_ATTEMPTED

    def meets(self, k: int) -> bool:
        """Is the complex homologically k-connected?"""
        if k <= -2:
            return True
        if self.connectivity <= -2:
            return False
        return self.acyclic or self.connectivity >= k

    def to_obj(self) -> dict:
        return {"connectivity": self.connectivity, "acyclic": self.acyclic,
                "groups": [g.to_obj() for g in self.groups],
                "pi1": self.pi1_status}


def with_pi1(report: ConnectivityReport, status: str) -> ConnectivityReport:
    return replace(report, pi1_status=status)


def boundary_matrix(X: SimplicialComplex, p: int) -> SparseIntMatrix:
    """Boundary map from p-chains to (p-1)-chains with alternating signs.

    Rows are indexed by the (p-1)-simplices in lexicographic order; for
    p = 0 the single row is the augmentation (all ones).
    """
    if p < 0:
        raise ValueError("degree must be non-negative")
    if X.is_empty:
        return SparseIntMatrix(0, 0)
    cols = faces(X, p)
    rows = faces(X, p - 1)
    index = {s: i for i, s in enumerate(rows)}
    entries = []
    for j, s in enumerate(cols):
        for pos, face in enumerate(s.boundary()):
            entries.append((index[face], j, -1 if pos % 2 else 1))
    return SparseIntMatrix.from_entries(len(rows), len(cols), entries)


class ChainComplex:
    """Chain complex with arbitrary-precision sparse boundary matrices.

    Degrees run from -1 (the augmentation line) upward.  Construction
    verifies that consecutive boundary maps compose to zero.
    """

    def __init__(self, sizes: dict, boundaries: dict, *, check: bool = True):
        self.sizes = dict(sizes)
        self.boundaries = dict(boundaries)
        self._factors: dict[int, tuple] = {}
        for p, mat in self.boundaries.items():
            if mat.nrows != self.sizes.get(p - 1, 0) or mat.ncols != self.sizes.get(p, 0):
                raise ValueError(f"boundary in degree {p} has inconsistent shape")
        if check:
            for p, mat in self.boundaries.items():
                upper = self.boundaries.get(p + 1)
                if upper is not None and not (mat @ upper).is_zero:
                    raise ValueError(
                        f"boundary composite in degrees {p + 1},{p} does not vanish")

    @property
    def top_degree(self) -> int:
        return max((p for p, n in self.sizes.items() if n), default=-1)

    def boundary(self, p: int) -> SparseIntMatrix:
        mat = self.boundaries.get(p)
        if mat is None:
            mat = SparseIntMatrix(self.sizes.get(p - 1, 0), self.sizes.get(p, 0))
        return mat

    def invariant_factors(self, p: int) -> tuple:
        if p not in self._factors:
            self._factors[p] = smith_normal_form(self.boundary(p))
        return self._factors[p]


def chain_complex(X: SimplicialComplex) -> ChainComplex:
    """Augmented simplicial chain complex of a complex."""
    if X.is_empty:
        return ChainComplex({-1: 1}, {})
    sizes = {-1: 1}
    for d, n in enumerate(f_vector(X)):
        sizes[d] = n
    boundaries = {p: boundary_matrix(X, p) for p in range(0, X.dim + 1)}
    return ChainComplex(sizes, boundaries)


def reduced_homology(C: ChainComplex, p: int) -> HomologyGroup:
    """Reduced integral homology of a chain complex in degree p >= 0."""
    if p < 0:
        raise ValueError("degree must be non-negative")
    n = C.sizes.get(p, 0)
    if n == 0:
        return HomologyGroup(p, 0)
    rank_down = len(C.invariant_factors(p))
    up = C.invariant_factors(p + 1)
    free = n - rank_down - len(up)
    torsion = tuple(t for t in up if t > 1)
    return HomologyGroup(p, free, torsion)


def all_homology(C: ChainComplex) -> tuple:
    """Every reduced homology group, with an Euler characteristic audit."""
    top = C.top_degree
    if top < 0:
        return ()
    groups = tuple(reduced_homology(C, p) for p in range(top + 1))
    chi = sum((-1) ** p * C.sizes.get(p, 0) for p in range(top + 1))
    chi_h = sum((-1) ** g.degree * g.free_rank for g in groups)
    if chi != 1 + chi_h:
        raise ArithmeticError(
            f"Euler characteristic mismatch: chains give {chi}, homology {1 + chi_h}")
    return groups


def homology_groups(X: SimplicialComplex) -> tuple:
    """All reduced homology groups of a complex (empty complex gives none)."""
    return all_homology(_chain_of(X))


def _chain_of(X: SimplicialComplex) -> ChainComplex:
    cache = X._cache
    with X._lock:
        C = cache.get("chain")
    if C is None:
        C = chain_complex(X)
        with X._lock:
            cache["chain"] = C
    return C


def component_count(X: SimplicialComplex) -> int:
    """Number of path components (0 for the empty complex)."""
    verts = X.vertices
    if not verts:
        return 0
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in faces(X, 1):
        a, b = e.verts
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in verts})


def meets_connectivity(X: SimplicialComplex, k: int):
    """Check homological k-connectivity with early exit.

    Returns ``(ok, achieved, groups)`` where ``achieved`` equals k when the
    check passed (vanishing was verified through degree k, possibly
    further than necessary) and otherwise is one less than the first
    nonvanishing degree found.
    """
    if k <= -2:
        return True, k, ()
    if X.is_empty:
        return False, -2, ()
    if k == -1:
        return True, -1, ()
    if component_count(X) > 1:
        return False, -1, (reduced_homology(_chain_of(X), 0),)
    if k == 0:
        # connected was just verified and reduced H0 is free on components-1
        return True, 0, ()
    groups = []
    C = _chain_of(X)
    for p in range(0, min(k, X.dim) + 1):
        g = reduced_homology(C, p)
        groups.append(g)
        if not g.is_zero:
            return False, p - 1, tuple(groups)
    return True, k, tuple(groups)


def homological_connectivity(X: SimplicialComplex) -> ConnectivityReport:
    """Largest k with reduced homology vanishing through degree k.

    Walks degrees upward and stops at the first nonvanishing group; a
    complex with no reduced homology at all reports its dimension with
    the ``acyclic`` flag set (it is homologically k-connected for all k).
    """
    if X.is_empty:
        return ConnectivityReport(-2, False)
    if component_count(X) > 1:
        return ConnectivityReport(-1, False, (reduced_homology(_chain_of(X), 0),))
    C = _chain_of(X)
    groups = []
    for p in range(0, X.dim + 1):
        g = reduced_homology(C, p)
        groups.append(g)
        if not g.is_zero:
            return ConnectivityReport(p - 1, False, tuple(groups))
    return ConnectivityReport(X.dim, True, tuple(groups))
