from itertools import product

import pytest
from hypothesis import given

from weakiasi.graph import (
    Bipartition,
    EdgeListError,
    EnumerationLimitError,
    Graph,
    GraphError,
    NotBipartite,
    add_edge,
    bipartition_of,
    complete,
    complete_bipartite,
    contract_edge,
    cycle,
    cycle_walk,
    format_edge_list,
    generate,
    independent_sets,
    parse_edge_list,
    path,
    topological_reduce,
)

from .conftest import graphs


def is_simple(g: Graph) -> bool:
    seen = set()
    for u, v in g.edges:
        if u == v or frozenset((u, v)) in seen or u not in g or v not in g:
            return False
        seen.add(frozenset((u, v)))
    return len(set(g.vertices)) == g.order


def test_generators():
    c5 = cycle(5)
    assert (c5.order, c5.size) == (5, 5)
    assert all(c5.degree(v) == 2 for v in c5.vertices)
    assert complete(4).size == 6
    k23 = complete_bipartite(2, 3)
    assert k23.size == 6 and isinstance(bipartition_of(k23), Bipartition)
    assert path(1).size == 0 and path(4).size == 3
    assert generate("complete_bipartite:2:3") == k23
    assert generate("cycle:5") == c5


@pytest.mark.parametrize("spec", ["path:0", "cycle:2", "complete:0", "complete_bipartite:0:3", "star:4", "cycle:x", "cycle:3:4"])
def test_generator_rejects_bad_parameters(spec):
    with pytest.raises(GraphError):
        generate(spec)


def test_graph_rejects_malformed_edges():
    with pytest.raises(GraphError, match="loop"):
        Graph(["a"], [("a", "a")])
    with pytest.raises(GraphError, match="duplicate edge"):
        Graph(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(GraphError, match="unknown vertex"):
        Graph(["a"], [("a", "b")])
    with pytest.raises(GraphError, match="duplicate vertex"):
        Graph(["a", "a"])


def test_edge_list_parse_and_round_trip():
    text = """# a triangle plus an isolated vertex
a b
b c   # trailing comment
c a

vertex z
"""
    g = parse_edge_list(text)
    assert g.vertices == ("a", "b", "c", "z")
    assert g.size == 3 and g.degree("z") == 0
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text, lineno",
    [("a b\na a\n", 2), ("a b\n\nb a\n", 3), ("a b c\n", 1), ("vertex\n", 1)],
)
def test_edge_list_errors_name_line(text, lineno):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


@given(graphs())
def test_edge_list_round_trip_property(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_bipartition_examples():
    assert bipartition_of(cycle(4)) == Bipartition(frozenset({"v1", "v3"}), frozenset({"v2", "v4"}))
    c5 = bipartition_of(cycle(5))
    assert isinstance(c5, NotBipartite) and len(c5.odd_cycle) == 5
    assert isinstance(bipartition_of(complete(3)), NotBipartite)


def _two_colorable(g: Graph) -> bool:
    for colors in product((0, 1), repeat=g.order):
        c = dict(zip(g.vertices, colors))
        if all(c[u] != c[v] for u, v in g.edges):
            return True
    return False


@given(graphs(max_vertices=8))
def test_bipartition_agrees_with_exhaustive_two_coloring(g):
    result = bipartition_of(g)
    assert isinstance(result, Bipartition) == _two_colorable(g)
    if isinstance(result, Bipartition):
        assert result.part1 | result.part2 == set(g.vertices)
        assert not result.part1 & result.part2
        assert all((u in result.part1) != (v in result.part1) for u, v in g.edges)
    else:
        cyc = result.odd_cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def _brute_independent(g: Graph) -> set[frozenset]:
    out = set()
    for mask in range(1 << g.order):
        s = frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)
        if all(not (u in s and v in s) for u, v in g.edges):
            out.add(s)
    return out


def test_independent_set_examples():
    assert list(independent_sets(complete(3))) == [frozenset(), frozenset({"v1"}), frozenset({"v2"}), frozenset({"v3"})]
    p3 = list(independent_sets(path(3)))
    assert len(p3) == 5 and frozenset({"v1", "v3"}) in p3
    # bitmask brute force over all 32 subsets of C_5 gives 11
    assert len(list(independent_sets(cycle(5)))) == 11


@given(graphs(max_vertices=9))
def test_independent_sets_complete_unique_and_ordered(g):
    sets = list(independent_sets(g))
    assert len(sets) == len(set(sets))
    assert set(sets) == _brute_independent(g)
    keys = [(len(s), sorted(g.rank[v] for v in s)) for s in sets]
    assert keys == sorted(keys)


def test_independent_sets_size_guard():
    g = Graph([f"x{i}" for i in range(31)])
    with pytest.raises(EnumerationLimitError, match="limit is 30"):
        next(independent_sets(g))


def test_add_edge():
    p3 = path(3)
    g = add_edge(p3, "v1", "v3")
    assert g.size == 3 and cycle_walk(g) is not None
    assert p3.size == 2  # input untouched
    k22 = complete_bipartite(2, 2)
    assert isinstance(bipartition_of(add_edge(k22, "v1", "v2")), NotBipartite)
    with pytest.raises(GraphError):
        add_edge(p3, "v1", "v2")
    with pytest.raises(GraphError):
        add_edge(p3, "v1", "v1")
    with pytest.raises(GraphError):
        add_edge(p3, "v1", "nope")


def test_contract_edge_examples():
    c3 = contract_edge(cycle(4), ("v1", "v2"))
    assert (c3.order, c3.size) == (3, 3) and cycle_walk(c3) is not None
    assert c3.vertices[0] == "v1+v2"
    k3 = contract_edge(complete(4), ("v2", "v4"))
    assert (k3.order, k3.size) == (3, 3)
    single = contract_edge(path(2), ("v2", "v1"))
    assert single.vertices == ("v1+v2",) and single.size == 0
    with pytest.raises(GraphError):
        contract_edge(path(3), ("v1", "v3"))


def test_contract_edge_avoids_id_collision():
    g = Graph(["a", "b", "a+b"], [("a", "b"), ("b", "a+b")])
    h = contract_edge(g, ("a", "b"))
    assert h.vertices == ("a+b#2", "a+b")
    assert h.has_edge("a+b#2", "a+b")


def test_topological_reduce_examples():
    c4 = topological_reduce(cycle(5), "v3")
    assert (c4.order, c4.size) == (4, 4) and cycle_walk(c4) is not None
    e = topological_reduce(path(3), "v2")
    assert e.edges == (("v1", "v3"),)
    with pytest.raises(GraphError, match="already adjacent"):
        topological_reduce(cycle(3), "v1")
    with pytest.raises(GraphError, match="degree"):
        topological_reduce(complete(4), "v1")


@given(graphs(min_vertices=2, max_vertices=8))
def test_transforms_preserve_simplicity(g):
    for e in g.edges:
        h = contract_edge(g, e)
        assert is_simple(h) and h.order == g.order - 1
    for v in g.vertices:
        if g.degree(v) == 2:
            u, w = g.neighbors(v)
            if not g.has_edge(u, w):
                h = topological_reduce(g, v)
                assert is_simple(h) and (h.order, h.size) == (g.order - 1, g.size - 1)


def test_cycle_walk():
    assert cycle_walk(cycle(5)) == ("v1", "v2", "v3", "v4", "v5")
    assert cycle_walk(path(4)) is None
    two_triangles = Graph("abcdef", [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")])
    assert cycle_walk(two_triangles) is None
