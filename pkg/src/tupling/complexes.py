"""Finite simplicial complexes stored facet first.

A complex is immutable after construction.  The per-dimension strata of
the downward closure materialize lazily under a lock (idempotent, safe to
share across workers) and count against a configurable simplex budget so
that blow-ups fail loudly instead of exhausting memory.

Vertex ids of derived complexes (joins, subdivisions, order complexes)
are assigned by lexicographic rank of their labeling object and recorded
in a :class:`~tupling.simplexes.VertexTable`, which keeps every
construction deterministic across runs.
"""

from __future__ import annotations

import threading
from typing import Iterable, Optional

from .budget import (
    BudgetExceededError,
    DEFAULT_VERTEX_ID_CAP,
    get_limit,
)
from .simplexes import EMPTY_SIMPLEX, Simplex, VertexTable


class SimplicialComplex:
    """Downward-closed family of simplices, stored by its facets.

    ``ambient`` is the size of the vertex-id space (all ids are below it);
    the actual vertex set of the complex is the union of its facets, so a
    complex inherited from a larger one (a link, say) keeps its original
    ids.  Use :func:`from_facets` to construct one.
    """

    __slots__ = ("ambient", "facets", "simplex_budget", "_lock", "_strata",
                 "_member_masks", "_cache")

    def __init__(self, facets, ambient, simplex_budget):
        self.facets = facets
        self.ambient = ambient
        self.simplex_budget = simplex_budget
        self._lock = threading.Lock()
        self._strata = None
        self._member_masks = None
        self._cache = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def _from_strata(cls, strata, ambient, simplex_budget):
        """Build from a complete closed family given stratum by stratum."""
        facets = []
        if strata:
            top = max(strata)
            marked = set()
            for d in range(top, -1, -1):
                level = strata.get(d, ())
                facets.extend(s for s in level if s.mask not in marked)
                for s in level:
                    for f in s.boundary():
                        if f.verts:
                            marked.add(f.mask)
        cx = cls(tuple(sorted(facets)), ambient, simplex_budget)
        cx._strata = {d: tuple(sorted(level)) for d, level in strata.items() if level}
        return cx

    # -- basic structure -------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 when empty."""
        if not self.facets:
            return -1
        return max(f.dim for f in self.facets)

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @property
    def vertices(self) -> tuple:
        """Sorted vertex ids actually covered by the facets."""
        mask = 0
        for f in self.facets:
            mask |= f.mask
        return Simplex.from_mask(mask).verts

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def contains(self, simplex: Simplex) -> bool:
        """Membership test; the empty simplex belongs to every non-empty complex."""
        m = simplex.mask
        return any(f.mask & m == m for f in self.facets)

    def __contains__(self, simplex: Simplex) -> bool:
        return self.contains(simplex)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.ambient == other.ambient
                and self.facets == other.facets)

    def __hash__(self):
        return hash((self.ambient, self.facets))

    def __repr__(self) -> str:
        return (f"SimplicialComplex(dim={self.dim}, "
                f"facets={len(self.facets)}, ambient={self.ambient})")

    # -- strata ------------------------------------------------------------

    def _materialize(self) -> dict:
        with self._lock:
            if self._strata is not None:
                return self._strata
            strata: dict[int, set] = {}
            for f in self.facets:
                strata.setdefault(f.dim, set()).add(f)
            total = 0
            for d in range(self.dim, 0, -1):
                level = strata.get(d, ())
                total += len(level)
                lower = strata.setdefault(d - 1, set())
                for s in level:
                    for face in s.boundary():
                        lower.add(face)
                if total + len(lower) > self.simplex_budget:
                    done = {k: tuple(sorted(v)) for k, v in strata.items() if k >= d}
                    raise BudgetExceededError(
                        "simplices", self.simplex_budget, partial=done)
            self._strata = {d: tuple(sorted(level))
                            for d, level in strata.items() if level}
            return self._strata

    def stratum(self, p: int) -> tuple:
        if self.is_empty or p > self.dim or p < 0:
            return ()
        return self._materialize().get(p, ())

    def member_masks(self) -> frozenset:
        """Bitmasks of every non-empty simplex, for O(1) membership tests."""
        with self._lock:
            cached = self._member_masks
        if cached is not None:
            return cached
        strata = self._materialize()
        masks = frozenset(s.mask for level in strata.values() for s in level)
        with self._lock:
            self._member_masks = masks
        return masks

    def n_simplices(self) -> int:
        """Total number of non-empty simplices."""
        if self.is_empty:
            return 0
        return sum(len(level) for level in self._materialize().values())


def from_facets(facets: Iterable[Iterable[int]], *,
                ambient: Optional[int] = None,
                simplex_budget: int | None = None,
                vertex_cap: int = DEFAULT_VERTEX_ID_CAP) -> SimplicialComplex:
    """Build the downward closure of the given facets.

    Non-maximal and duplicate input facets are absorbed; explicitly empty
    facets are dropped (the empty simplex is implicit in every non-empty
    complex, and alone it denotes the empty complex).  Facets are stored in
    lexicographic order.  ``ambient`` declares the vertex-id space and must
    cover every id used; ids at or above ``vertex_cap`` are rejected as a
    resource guard because they inflate the bitmask representation.
    """
    if simplex_budget is None:
        simplex_budget = get_limit("simplices")
    simplices = sorted({Simplex(f) for f in facets}, key=lambda s: -len(s.verts))
    maximal = []
    for s in simplices:
        if not s.verts:
            continue
        if s.verts[-1] >= vertex_cap:
            raise ValueError(
                f"vertex id {s.verts[-1]} exceeds the configured cap {vertex_cap}")
        if not any(s.mask & kept.mask == s.mask for kept in maximal):
            maximal.append(s)
    max_id = max((s.verts[-1] for s in maximal), default=-1)
    if ambient is None:
        ambient = max_id + 1
    elif ambient < 0 or ambient < max_id + 1:
        raise ValueError(
            f"declared vertex space {ambient} does not cover vertex id {max_id}")
    return SimplicialComplex(tuple(sorted(maximal)), ambient, simplex_budget)


def faces(X: SimplicialComplex, p: int) -> tuple:
    """The p-simplices of X; p = -1 gives the empty simplex of a non-empty X."""
    if p < -1:
        raise ValueError("dimension must be at least -1")
    if p == -1:
        return () if X.is_empty else (EMPTY_SIMPLEX,)
    return X.stratum(p)


def f_vector(X: SimplicialComplex) -> tuple:
    """Per-dimension simplex counts from dimension 0 up to dim X."""
    if X.is_empty:
        return ()
    return tuple(len(X.stratum(d)) for d in range(X.dim + 1))


def link(X: SimplicialComplex, simplex: Simplex) -> SimplicialComplex:
    """All simplices disjoint from ``simplex`` whose union with it lies in X.

    Vertex identifiers are inherited from X.  Raises if ``simplex`` is not
    a member.
    """
    if not isinstance(simplex, Simplex):
        simplex = Simplex(simplex)
    if not X.contains(simplex):
        raise ValueError(f"{simplex!r} is not a simplex of the complex")
    cofaces = [f.difference(simplex) for f in X.facets if simplex.issubset(f)]
    return from_facets((c.verts for c in cofaces),
                       ambient=X.ambient, simplex_budget=X.simplex_budget)


def skeleton(X: SimplicialComplex, d: int) -> SimplicialComplex:
    """The subcomplex of all simplices of dimension at most d."""
    if d < 0:
        raise ValueError("skeleton dimension must be non-negative")
    if X.is_empty or d >= X.dim:
        return X
    low = [f.verts for f in X.facets if f.dim < d]
    low.extend(s.verts for s in X.stratum(d))
    return from_facets(low, ambient=X.ambient, simplex_budget=X.simplex_budget)


def join(X: SimplicialComplex, Y: SimplicialComplex):
    """Join of two complexes; simplices are unions of one from each side.

    Y's vertex ids are shifted past X's id space.  Returns the join and a
    VertexTable labeling each vertex by ("left", original id) or
    ("right", original id).
    """
    shift = X.ambient
    fx = X.facets or (EMPTY_SIMPLEX,)
    fy = Y.facets or (EMPTY_SIMPLEX,)
    new_facets = []
    for a in fx:
        for b in fy:
            new_facets.append(a.verts + tuple(v + shift for v in b.verts))
    budget = max(X.simplex_budget, Y.simplex_budget)
    Z = from_facets(new_facets, ambient=shift + Y.ambient, simplex_budget=budget)
    labels = {v: ("left", v) for v in X.vertices}
    labels.update({w + shift: ("right", w) for w in Y.vertices})
    return Z, VertexTable(labels)


def xm_complex(X: SimplicialComplex, m: int):
    """Order complex of the poset of simplices of X with at least m vertices.

    Vertices of the result are those simplices, ranked lexicographically;
    simplices are strict chains under face inclusion.  m = 1 gives the
    first barycentric subdivision.  Returns the complex and the
    VertexTable back to source simplices.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if X.is_empty:
        return from_facets(()), VertexTable({})
    strata = X._materialize()
    elements = sorted(s for d, level in strata.items() if d >= m - 1 for s in level)
    if not elements:
        return from_facets(()), VertexTable({})
    table = VertexTable.from_labels(elements)
    members = X.member_masks()
    xverts = X.vertices
    budget = X.simplex_budget

    chains = []

    def extend(chain, top: Simplex):
        grown = False
        for v in xverts:
            if v in top:
                continue
            bigger = Simplex._make(tuple(sorted(top.verts + (v,))))
            if bigger.mask in members:
                grown = True
                chain.append(table.id_of(bigger))
                extend(chain, bigger)
                chain.pop()
        if not grown:
            chains.append(tuple(chain))
            if len(chains) > budget:
                raise BudgetExceededError("simplices", budget)

    for start in elements:
        if len(start.verts) != m:
            continue
        extend([table.id_of(start)], start)

    Z = from_facets(chains, ambient=len(elements), simplex_budget=budget)
    return Z, table


def barycentric(X: SimplicialComplex):
    """First barycentric subdivision: order complex of all non-empty simplices."""
    if X.is_empty:
        raise ValueError("barycentric subdivision requires a non-empty complex")
    return xm_complex(X, 1)


def simplex_complex(n: int, **kwargs) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return from_facets([range(n + 1)], **kwargs)


def boundary_complex(n: int, **kwargs) -> SimplicialComplex:
    """The boundary of the n-simplex (a triangulated (n-1)-sphere)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    verts = tuple(range(n + 1))
    return from_facets(
        [verts[:i] + verts[i + 1:] for i in range(n + 1)], **kwargs)
