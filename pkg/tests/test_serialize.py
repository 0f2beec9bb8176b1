import json

from tupling import Graph, barycentric, from_facets, join, r_tuple, simplex_complex
from tupling.serialize import (
    complex_from_obj,
    complex_to_obj,
    dumps,
    graph_from_obj,
    graph_to_obj,
    table_to_obj,
)


class TestComplexJson:
    def test_facets_sorted_lexicographically(self):
        X = from_facets([(2, 3), (0, 1, 2), (0, 4)])
        assert complex_to_obj(X)["facets"] == [[0, 1, 2], [0, 4], [2, 3]]

    def test_roundtrip(self):
        X = from_facets([(0, 1, 2), (2, 3)], ambient=6)
        Y = complex_from_obj(json.loads(dumps(complex_to_obj(X))))
        assert Y == X

    def test_byte_stability(self):
        X = from_facets([(5, 1), (1, 2, 3)])
        assert dumps(complex_to_obj(X)) == dumps(complex_to_obj(X))

    def test_empty_complex(self):
        obj = complex_to_obj(from_facets([]))
        assert obj == {"vertices": 0, "facets": []}
        assert complex_from_obj(obj).is_empty

    def test_ambient_preserved(self):
        obj = {"vertices": 9, "facets": [[0, 1]]}
        X = complex_from_obj(obj)
        assert X.ambient == 9
        assert complex_to_obj(X) == obj


class TestGraphJson:
    def test_roundtrip(self):
        G = Graph.from_edges(4, [(2, 3), (0, 1)])
        assert graph_from_obj(graph_to_obj(G)) == G

    def test_edges_sorted(self):
        G = Graph.from_edges(4, [(2, 3), (0, 2), (0, 1)])
        assert graph_to_obj(G)["edges"] == [[0, 1], [0, 2], [2, 3]]


class TestTableJson:
    def test_simplex_labels(self):
        T = r_tuple(simplex_complex(2), 2)
        obj = table_to_obj(T.delta_table)
        assert obj["labels"]["0"] == [0, 1]

    def test_chain_labels(self):
        B, table = barycentric(simplex_complex(1))
        obj = table_to_obj(table)
        assert set(obj["labels"]) == {"0", "1", "2"}

    def test_join_labels(self):
        Z, table = join(from_facets([(0,)]), from_facets([(0,)]))
        obj = table_to_obj(table)
        assert obj["labels"]["0"] == ["left", 0]
        assert obj["labels"]["1"] == ["right", 0]
