"""Canonical JSON encodings for complexes, graphs, tables and reports.

Output is byte-stable: keys are sorted, facets are emitted in
lexicographic order, and nothing run-dependent (timings, memory) appears
unless explicitly requested by the caller.
"""

from __future__ import annotations

import json

from .complexes import SimplicialComplex, from_facets
from .doubling import Graph
from .simplexes import Simplex, VertexTable


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def complex_to_obj(X: SimplicialComplex) -> dict:
    return {"vertices": X.ambient,
            "facets": [list(f.verts) for f in X.facets]}


def complex_from_obj(obj, **kwargs) -> SimplicialComplex:
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ValueError("complex JSON must be an object with a 'facets' list")
    facets = obj["facets"]
    if not isinstance(facets, list) or any(not isinstance(f, list) for f in facets):
        raise ValueError("'facets' must be a list of vertex-id lists")
    ambient = obj.get("vertices")
    if ambient is not None and (not isinstance(ambient, int) or ambient < 0):
        raise ValueError("'vertices' must be a non-negative integer")
    return from_facets(facets, ambient=ambient, **kwargs)


def graph_to_obj(G: Graph) -> dict:
    return {"vertices": G.vertex_count,
            "edges": [list(e) for e in sorted(G.edges)]}


def graph_from_obj(obj) -> Graph:
    if not isinstance(obj, dict) or "edges" not in obj or "vertices" not in obj:
        raise ValueError("graph JSON must have 'vertices' and 'edges'")
    edges = obj["edges"]
    if any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise ValueError("'edges' must be a list of pairs")
    return Graph.from_edges(obj["vertices"], edges)


def label_to_obj(label):
    if isinstance(label, Simplex):
        return list(label.verts)
    if isinstance(label, tuple):
        return [label_to_obj(x) for x in label]
    return label


def table_to_obj(table: VertexTable) -> dict:
    return {"labels": {str(vid): label_to_obj(lab) for vid, lab in table.items()}}


# schema for every `verify` and `wcm` envelope the CLI emits
VERIFY_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "report", "verdict"],
    "properties": {
        "command": {"type": "string"},
        "verdict": {"enum": ["pass-certified", "pass-homological", "fail",
                             "inconclusive", "budget-exceeded"]},
        "wall_time_seconds": {"type": "number"},
        "report": {
            "type": "object",
            "required": ["kind", "verdict"],
            "properties": {
                "kind": {"type": "string"},
                "verdict": {"enum": ["pass-certified", "pass-homological",
                                     "fail", "inconclusive",
                                     "budget-exceeded"]},
                "notes": {"type": "array", "items": {"type": "string"}},
            },
        },
    },
    "additionalProperties": False,
}
