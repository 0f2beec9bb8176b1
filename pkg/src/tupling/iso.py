"""Invariant-guided backtracking search for complex isomorphisms.

Desk-scale only.  Vertices are partitioned by cheap invariants (facet
dimension profile, link f-vector); the search assigns vertices in rarity
order with adjacency-consistency pruning and re-verifies any candidate
bijection against the full facet families before returning it, so a
returned mapping is always correct.  Exhausting the node budget raises,
which is an explicit inconclusive outcome, never a wrong answer.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .budget import BudgetExceededError, get_limit
from .complexes import SimplicialComplex, f_vector, faces, link
from .simplexes import Simplex


def _vertex_invariant(X: SimplicialComplex, v: int) -> tuple:
    dims = tuple(sorted(f.dim for f in X.facets if v in f))
    return dims, f_vector(link(X, Simplex((v,))))


def is_isomorphic(X: SimplicialComplex, Y: SimplicialComplex, *,
                  node_budget: int | None = None) -> Optional[dict]:
    """A facet-preserving vertex bijection from X to Y, or None.

    The search order is deterministic; identical inputs explore identical
    trees.  Raises BudgetExceededError when the node budget runs out.
    """
    if node_budget is None:
        node_budget = get_limit("iso-nodes")
    if X.is_empty and Y.is_empty:
        return {}
    if f_vector(X) != f_vector(Y):
        return None
    if Counter(f.dim for f in X.facets) != Counter(f.dim for f in Y.facets):
        return None

    xv = X.vertices
    yv = Y.vertices
    x_inv = {v: _vertex_invariant(X, v) for v in xv}
    y_inv = {w: _vertex_invariant(Y, w) for w in yv}
    if Counter(x_inv.values()) != Counter(y_inv.values()):
        return None
    classes: dict[tuple, list] = {}
    for w in yv:
        classes.setdefault(y_inv[w], []).append(w)

    # assign rare classes first to cut the branching early
    order = sorted(xv, key=lambda v: (len(classes[x_inv[v]]), v))
    x_adj = {v: 0 for v in xv}
    y_adj = {w: 0 for w in yv}
    for e in faces(X, 1):
        a, b = e.verts
        x_adj[a] |= 1 << b
        x_adj[b] |= 1 << a
    for e in faces(Y, 1):
        a, b = e.verts
        y_adj[a] |= 1 << b
        y_adj[b] |= 1 << a

    x_facets = X.facets
    y_facet_set = set(Y.facets)
    nodes = 0
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for u, x in assignment.items():
            if ((x_adj[v] >> u) & 1) != ((y_adj[w] >> x) & 1):
                return False
        return True

    def search(i: int) -> Optional[dict]:
        nonlocal nodes
        if i == len(order):
            image = {Simplex(assignment[u] for u in f.verts) for f in x_facets}
            if image == y_facet_set:
                return dict(assignment)
            return None
        v = order[i]
        for w in classes[x_inv[v]]:
            if w in used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("iso-nodes", node_budget)
            if not consistent(v, w):
                continue
            assignment[v] = w
            used.add(w)
            found = search(i + 1)
            if found is not None:
                return found
            del assignment[v]
            used.remove(w)
        return None

    return search(0)
