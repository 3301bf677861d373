import json
import random

import pytest

from multint.errors import (
    BadSubdivisionArityError,
    DuplicateLabelError,
    OracleSizeExceededError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownLabelError,
)
from multint.graph import (
    DEFAULT_ORACLE_LIMIT,
    Graph,
    Label,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    graph_from_edgelist,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_edgelist,
    graph_to_json_dict,
    induced_subgraph,
    is_clique,
    is_independent_set,
    max_independent_set_bruteforce,
    path_graph,
    subdivide,
)
from bruteforce import exhaustive_max_independent

from multint.corpus import random_original_graph, random_weights


def test_label_parse_and_str():
    assert Label.parse("x3") == Label("x", 3)
    assert Label.parse("xo12") == Label("xo", 12)
    assert Label.parse("xe1") == Label("xe", 1)
    assert Label.parse("A7") == Label("A", 7)
    assert str(Label("b", 4)) == "b4"
    for bad in ("x0", "x", "e5", "a01", "xo", "x-1", "y3", "x3x", ""):
        with pytest.raises(ValueError):
            Label.parse(bad)
    with pytest.raises(ValueError):
        Label("z", 1)
    with pytest.raises(ValueError):
        Label("x", 0)


def test_label_total_order():
    # family compares as a string, so uppercase families sort first
    assert Label("A", 2) < Label("a", 1)
    assert Label("a", 1) < Label("a", 2) < Label("b", 1) < Label("x", 1)
    assert Label("x", 2) < Label("x", 10)
    assert Label("x", 9) < Label("xe", 1) < Label("xo", 1)


def test_graph_validation():
    x1, x2 = Label("x", 1), Label("x", 2)
    with pytest.raises(DuplicateLabelError):
        Graph([x1, x1], [])
    with pytest.raises(UnknownEndpointError):
        Graph([x1], [(x1, x2)])
    with pytest.raises(SelfLoopError):
        Graph([x1, x2], [(x1, x1)])
    # duplicate edges (either orientation) collapse
    g = Graph([x1, x2], [(x1, x2), (x2, x1), (x1, x2)])
    assert g.m == 1
    assert g.has_edge(x2, x1)


def test_build_graph_accepts_strings():
    g = build_graph(["x1", "x2", Label("x", 3)], [("x1", "x3")])
    assert g.n == 3 and g.m == 1
    assert g.has_edge(Label("x", 1), Label("x", 3))


def test_standard_builders():
    k4 = complete_graph(4)
    assert (k4.n, k4.m) == (4, 6)
    c5 = cycle_graph(5)
    assert (c5.n, c5.m) == (5, 5)
    assert all(c5.degree(v) == 2 for v in c5.sorted_vertices)
    p4 = path_graph(4)
    assert (p4.n, p4.m) == (4, 3)
    assert complement(k4).m == 0
    assert complement(complement(c5)) == c5


def test_complement_random_involution():
    rng = random.Random(4201)
    for _ in range(30):
        g = random_original_graph(rng)
        assert complement(complement(g)) == g
        assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_induced_subgraph():
    g = cycle_graph(5)
    keep = [Label("x", 1), Label("x", 2), Label("x", 4)]
    h = induced_subgraph(g, keep)
    assert h.n == 3 and h.m == 1
    assert h.has_edge(Label("x", 1), Label("x", 2))
    with pytest.raises(UnknownLabelError):
        induced_subgraph(g, [Label("x", 9)])


def test_edge_index_canonical_order():
    g = build_graph(["x1", "x2", "x3", "x4"], [("x2", "x4"), ("x1", "x3"), ("x1", "x2")])
    idx = g.edge_index()
    assert [(e.k, e.left, e.right) for e in idx] == [(1, 1, 2), (2, 1, 3), (3, 2, 4)]


def test_subdivide_shapes():
    g = complete_graph(3)
    for w, families in ((2, "ab"), (3, "abc"), (4, "abcd")):
        s = subdivide(g, w)
        assert s.n == g.n + w * g.m
        assert s.m == (w + 1) * g.m
        for e in g.edge_index():
            chain = [Label(f, e.k) for f in families]
            path = [Label("x", e.left), *chain, Label("x", e.right)]
            for u, v in zip(path, path[1:]):
                assert s.has_edge(u, v)
            # interior vertices keep degree 2, nothing shortcuts the path
            for v in chain:
                assert s.degree(v) == 2
            assert not s.has_edge(path[0], path[-1])
        for v in g.sorted_vertices:
            assert s.degree(v) == g.degree(v)
    with pytest.raises(BadSubdivisionArityError):
        subdivide(g, 5)
    with pytest.raises(UnknownLabelError):
        subdivide(subdivide(g, 2), 2)


def test_subdivision_adds_m_to_independence_number():
    for g in (complete_graph(3), path_graph(4), cycle_graph(5), complete_graph(5)):
        _, alpha = exhaustive_max_independent(g)
        _, alpha_subd = max_independent_set_bruteforce(subdivide(g, 2))
        assert alpha_subd == alpha + g.m


def test_is_clique_is_independent():
    g = cycle_graph(4)
    assert is_clique(g, [Label("x", 1), Label("x", 2)])
    assert not is_clique(g, [Label("x", 1), Label("x", 3)])
    assert is_independent_set(g, [Label("x", 1), Label("x", 3)])
    assert not is_independent_set(g, [Label("x", 1), Label("x", 2)])
    with pytest.raises(UnknownLabelError):
        is_clique(g, [Label("x", 7)])


def test_mis_bruteforce_matches_exhaustive():
    rng = random.Random(90125)
    for trial in range(60):
        g = random_original_graph(rng, n_min=2, n_max=9)
        weights = random_weights(rng, g.vertices) if trial % 2 else None
        members, weight = max_independent_set_bruteforce(g, weights)
        ref_members, ref_weight = exhaustive_max_independent(g, weights)
        assert weight == ref_weight
        assert members == ref_members
        assert is_independent_set(g, members)
        wmap = weights or {v: 1 for v in g.vertices}
        assert sum(wmap[v] for v in members) == weight


def test_mis_oracle_limit():
    big = Graph([Label("x", i) for i in range(1, DEFAULT_ORACLE_LIMIT + 2)], [])
    with pytest.raises(OracleSizeExceededError):
        max_independent_set_bruteforce(big)
    members, weight = max_independent_set_bruteforce(big, oracle_limit=big.n)
    assert weight == big.n and members == big.vertices


def test_mis_weight_validation():
    g = path_graph(3)
    with pytest.raises(UnknownLabelError):
        max_independent_set_bruteforce(g, {Label("x", 1): 1})
    bad = {v: 1 for v in g.vertices}
    bad[Label("x", 2)] = -3
    with pytest.raises(ValueError):
        max_independent_set_bruteforce(g, bad)


def test_json_roundtrip():
    rng = random.Random(777)
    for _ in range(20):
        g = random_original_graph(rng)
        data = graph_to_json_dict(g)
        json.dumps(data)  # must be plain JSON types
        assert graph_from_json_dict(data) == g
    with pytest.raises(ValueError):
        graph_from_json_dict({"vertices": ["x1"]})
    with pytest.raises(ValueError):
        graph_from_json_dict({"vertices": ["x1", "x2"], "edges": [["x1"]]})


def test_edgelist_roundtrip_and_isolated_vertices():
    g = build_graph(["x1", "x2", "x3", "x4"], [("x1", "x3")])
    text = graph_to_edgelist(g)
    assert "x2" in text.split() and "x4" in text.split()
    assert graph_from_edgelist(text) == g
    parsed = graph_from_edgelist("# comment\nx1 x2  # trailing\n\nx3\n")
    assert parsed.n == 3 and parsed.m == 1
    with pytest.raises(ValueError):
        graph_from_edgelist("x1 x2 x3\n")


def test_dot_output():
    g = build_graph(["x1", "x2", "x3"], [("x1", "x2")])
    dot = graph_to_dot(g)
    assert dot.startswith("graph G {")
    assert '"x3";' in dot
    assert '"x1" -- "x2";' in dot
    assert dot.endswith("}\n")
