"""Simplices in canonical form, plus vertex-label tables for derived complexes."""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator


class Simplex:
    """A finite set of non-negative integer vertex ids.

    Canonical form is the strictly increasing vertex tuple.  An integer
    bitmask over vertex ids backs the set operations; disjointness and
    union tests on masks dominate the tupling enumerations, so they must
    be cheap.  The empty simplex (dimension -1) is representable.
    """

    __slots__ = ("verts", "mask", "_hash")

    def __init__(self, vertices: Iterable[int] = ()):
        verts = tuple(sorted(set(vertices)))
        if verts and verts[0] < 0:
            raise ValueError("vertex ids must be non-negative")
        mask = 0
        for v in verts:
            mask |= 1 << v
        self.verts = verts
        self.mask = mask
        self._hash = hash(verts)

    @classmethod
    def _make(cls, verts: tuple) -> "Simplex":
        # internal fast path: verts must already be sorted and duplicate free
        s = cls.__new__(cls)
        mask = 0
        for v in verts:
            mask |= 1 << v
        s.verts = verts
        s.mask = mask
        s._hash = hash(verts)
        return s

    @classmethod
    def from_mask(cls, mask: int) -> "Simplex":
        if mask < 0:
            raise ValueError("mask must be non-negative")
        verts = []
        m = mask
        while m:
            low = m & -m
            verts.append(low.bit_length() - 1)
            m ^= low
        return cls._make(tuple(verts))

    @property
    def dim(self) -> int:
        return len(self.verts) - 1

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.verts)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.mask >> v) & 1 == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Simplex) and self.mask == other.mask

    def __lt__(self, other: "Simplex") -> bool:
        return self.verts < other.verts

    def __le__(self, other: "Simplex") -> bool:
        return self.verts <= other.verts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Simplex{self.verts}"

    def union(self, other: "Simplex") -> "Simplex":
        return Simplex.from_mask(self.mask | other.mask)

    def intersection(self, other: "Simplex") -> "Simplex":
        return Simplex.from_mask(self.mask & other.mask)

    def difference(self, other: "Simplex") -> "Simplex":
        return Simplex.from_mask(self.mask & ~other.mask)

    def isdisjoint(self, other: "Simplex") -> bool:
        return self.mask & other.mask == 0

    def issubset(self, other: "Simplex") -> bool:
        return self.mask & other.mask == self.mask

    def boundary(self) -> tuple:
        """Codimension-one faces in omitted-vertex order (position i first)."""
        if not self.verts:
            return ()
        if len(self.verts) == 1:
            return (EMPTY_SIMPLEX,)
        vs = self.verts
        return tuple(Simplex._make(vs[:i] + vs[i + 1:]) for i in range(len(vs)))

    def subsimplices(self, k: int) -> tuple:
        """All k-dimensional faces."""
        if k < -1 or k > self.dim:
            return ()
        if k == -1:
            return (EMPTY_SIMPLEX,)
        return tuple(Simplex._make(c) for c in combinations(self.verts, k + 1))


EMPTY_SIMPLEX = Simplex(())


class VertexTable:
    """Bijection between vertex ids of a derived complex and labeling objects.

    Labels are arbitrary hashable values (source simplices, chains,
    injection tuples, ...).  The table is total and injective in both
    directions; violations are rejected at construction.
    """

    __slots__ = ("_label_of", "_id_of")

    def __init__(self, mapping: dict):
        self._label_of = dict(mapping)
        self._id_of = {}
        for vid, label in self._label_of.items():
            if label in self._id_of:
                raise ValueError(f"duplicate label {label!r}")
            self._id_of[label] = vid

    @classmethod
    def from_labels(cls, labels: Iterable[Hashable]) -> "VertexTable":
        """Table whose vertex ids are positions in the given label sequence."""
        return cls({i: lab for i, lab in enumerate(labels)})

    def label_of(self, vid: int):
        return self._label_of[vid]

    def id_of(self, label) -> int:
        return self._id_of[label]

    def __len__(self) -> int:
        return len(self._label_of)

    def __contains__(self, vid: int) -> bool:
        return vid in self._label_of

    def items(self):
        return sorted(self._label_of.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexTable) and self._label_of == other._label_of

    def __repr__(self) -> str:
        return f"VertexTable({len(self)} vertices)"
