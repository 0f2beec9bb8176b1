"""Bounded fundamental-group triviality certification.

Connectivity above degree zero is verified homologically elsewhere; this
module narrows the gap between homological and genuine connectivity.  It
builds the edge-path group presentation of a connected complex on a
spanning tree (generators are non-tree edges, relators come from
triangles) and runs a bounded greedy Tietze simplification.  Outcomes:

- "trivial-certified": every generator was eliminated.  Together with
  vanishing homology this genuinely certifies connectivity (Hurewicz).
- "nontrivial-certified": the abelianization witnesses H1 != 0.
- "inconclusive": simplification stalled or ran out of budget.

Soundness over power: the simplifier never reports triviality it has not
syntactically derived.
"""

from __future__ import annotations

from .budget import get_limit
from .complexes import SimplicialComplex, faces
from .homology import (
    PI1_INCONCLUSIVE,
    PI1_NONTRIVIAL,
    PI1_TRIVIAL,
    _chain_of,
    component_count,
    reduced_homology,
)


def edge_path_presentation(X: SimplicialComplex):
    """Generators and relators of the edge-path group on a spanning tree.

    Generators are numbered from 1; words are tuples of signed generator
    indices.  Tree edges contribute no letters, and each 2-simplex
    {a < b < c} contributes the relator ab . bc . (ac)^-1.
    """
    verts = X.vertices
    adjacency: dict[int, list] = {v: [] for v in verts}
    for e in faces(X, 1):
        a, b = e.verts
        adjacency[a].append(b)
        adjacency[b].append(a)
    root = verts[0]
    seen = {root}
    tree = set()
    queue = [root]
    while queue:
        v = queue.pop(0)
        for w in sorted(adjacency[v]):
            if w not in seen:
                seen.add(w)
                tree.add((v, w) if v < w else (w, v))
                queue.append(w)
    if len(seen) != len(verts):
        raise ValueError("complex must be path-connected")

    gens = {}
    for e in faces(X, 1):
        if e.verts not in tree:
            gens[e.verts] = len(gens) + 1

    def letter(a, b):
        # signed generator for the directed edge a -> b; 0 for tree edges
        key = (a, b) if a < b else (b, a)
        g = gens.get(key, 0)
        if g == 0:
            return 0
        return g if a < b else -g

    relators = []
    for t in faces(X, 2):
        a, b, c = t.verts
        word = tuple(x for x in (letter(a, b), letter(b, c), -letter(a, c)) if x)
        relators.append(_free_reduce(word))
    return len(gens), relators


def _free_reduce(word: tuple) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    while len(out) > 1 and out[0] == -out[-1]:
        out = out[1:-1]
    return tuple(out)


def _invert(word: tuple) -> tuple:
    return tuple(-x for x in reversed(word))


def pi1_triviality(X: SimplicialComplex, *,
                   max_steps: int | None = None,
                   max_total_length: int | None = None) -> str:
    """Status of the fundamental group of a non-empty connected complex."""
    if max_steps is None:
        max_steps = get_limit("tietze-steps")
    if max_total_length is None:
        max_total_length = get_limit("tietze-length")
    if X.is_empty or component_count(X) != 1:
        raise ValueError("pi1 certification requires a non-empty connected complex")
    ngens, relators = edge_path_presentation(X)
    if ngens == 0:
        return PI1_TRIVIAL

    words = {i: w for i, w in enumerate(relators) if w}
    occurrences: dict[int, set] = {g: set() for g in range(1, ngens + 1)}
    for i, w in words.items():
        for x in w:
            occurrences[abs(x)].add(i)
    alive = set(range(1, ngens + 1))
    total_length = sum(len(w) for w in words.values())
    steps = 0

    def substitute(word, gen, replacement):
        out = []
        for x in word:
            if x == gen:
                out.extend(replacement)
            elif x == -gen:
                out.extend(_invert(replacement))
            else:
                out.append(x)
        return _free_reduce(tuple(out))

    while alive:
        # find a relator in which some live generator occurs exactly once
        target = None
        for i in sorted(words, key=lambda i: (len(words[i]), i)):
            counts: dict[int, int] = {}
            for x in words[i]:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = sorted(g for g, c in counts.items() if c == 1)
            if once:
                target = (i, once[0])
                break
        if target is None:
            break
        idx, gen = target
        word = words.pop(idx)
        total_length -= len(word)
        for x in word:
            occurrences[abs(x)].discard(idx)
        # rotate so the +/-gen letter leads, then solve for gen
        pos = next(p for p, x in enumerate(word) if abs(x) == gen)
        rotated = word[pos:] + word[:pos]
        rest = rotated[1:]
        replacement = _invert(rest) if rotated[0] > 0 else rest
        alive.discard(gen)
        for j in sorted(occurrences[gen]):
            old = words[j]
            new = substitute(old, gen, replacement)
            total_length += len(new) - len(old)
            for x in old:
                occurrences[abs(x)].discard(j)
            if new:
                words[j] = new
                for x in new:
                    occurrences[abs(x)].add(j)
            else:
                del words[j]
            steps += 1
            if steps > max_steps or total_length > max_total_length:
                return _abelian_fallback(X)
        occurrences[gen] = set()

    if not alive:
        return PI1_TRIVIAL
    return _abelian_fallback(X)


def _abelian_fallback(X: SimplicialComplex) -> str:
    h1 = reduced_homology(_chain_of(X), 1)
    return PI1_NONTRIVIAL if not h1.is_zero else PI1_INCONCLUSIVE
