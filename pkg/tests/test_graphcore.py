import pytest

from relgraph.errors import MalformedGraphFile, RelgraphError
from relgraph.graphcore import (
    CUBE_EDGE_LABELS,
    WAGNER_EDGE_LABELS,
    NamedGraphSpec,
    build_graph,
    complete_graph,
    components,
    cube_graph,
    cut_vertices,
    cycle_graph,
    edge_connectivity,
    format_edge_list,
    is_connected,
    is_two_connected,
    label_edge_id,
    mobius_graph,
    named_graph,
    parse_edge_list,
    path_graph,
    read_edge_list,
    subdivide,
    wagner_graph,
    write_edge_list,
)
from relgraph.iso import are_isomorphic


def test_build_c4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4 and g.edges[2] == (2, 3)
    assert are_isomorphic(g, cycle_graph(4))


def test_parallel_pair_allowed():
    g = build_graph(2, [(0, 1), (0, 1)])
    assert g.m == 2 and not g.is_simple()
    assert g.adjacency[0] == (1, 1)


def test_loop_rejected():
    with pytest.raises(RelgraphError, match="loops unsupported"):
        build_graph(3, [(0, 0)])


def test_endpoint_out_of_range():
    with pytest.raises(RelgraphError):
        build_graph(2, [(0, 2)])


def test_wagner_labels():
    w = wagner_graph()
    assert (w.n, w.m) == (8, 12) and w.is_cubic()
    for i, (a, b) in enumerate(WAGNER_EDGE_LABELS):
        assert set(w.edges[i]) == {a - 1, b - 1}
    # e5 = {1,2}, e1 = {1,5}
    assert label_edge_id(WAGNER_EDGE_LABELS, (2, 1)) == 4
    assert label_edge_id(WAGNER_EDGE_LABELS, (1, 5)) == 0


def test_cube_labels():
    q = cube_graph()
    assert (q.n, q.m) == (8, 12) and q.is_cubic()
    assert [set(e) for e in q.edges[:8]] == [{i, (i + 1) % 8} for i in range(8)]
    assert {frozenset(e) for e in q.edges[8:]} == {frozenset((a - 1, b - 1)) for a, b in ((1, 6), (2, 5), (3, 8), (4, 7))}
    assert CUBE_EDGE_LABELS[8:] == ((1, 6), (2, 5), (3, 8), (4, 7))


def test_mobius_four_is_wagner():
    assert are_isomorphic(mobius_graph(4), wagner_graph())


@pytest.mark.parametrize("p", range(2, 9))
def test_mobius_shape(p):
    g = mobius_graph(p)
    assert (g.n, g.m) == (2 * p, 3 * p) and g.is_cubic()


def test_named_graph_specs():
    assert are_isomorphic(named_graph(NamedGraphSpec("cycle", 4)), cycle_graph(4))
    assert named_graph(NamedGraphSpec("wagner")).m == 12
    assert named_graph(NamedGraphSpec("complete", 5)).m == 10
    assert named_graph(NamedGraphSpec("path", 1)).n == 1


@pytest.mark.parametrize("kind,param", [("mobius", 1), ("cycle", 2), ("path", 0), ("complete", 0), ("star", 3)])
def test_named_graph_rejects(kind, param):
    with pytest.raises(RelgraphError):
        NamedGraphSpec(kind, param)


def test_connectivity_examples():
    c4 = cycle_graph(4)
    assert is_connected(c4)
    assert not is_connected(c4.without_edges([0, 2]))
    assert is_connected(wagner_graph())
    assert is_connected(build_graph(0, []))
    assert is_connected(build_graph(1, []))
    assert not is_connected(build_graph(2, []))


def test_components_sorted():
    g = build_graph(5, [(3, 4), (0, 1)])
    assert sorted(map(sorted, components(g))) == [[0, 1], [2], [3, 4]]


@pytest.mark.parametrize("g,lam", [(cycle_graph(4), 2), (wagner_graph(), 3), (complete_graph(4), 3),
                                    (complete_graph(7), 6), (path_graph(3), 1), (mobius_graph(8), 3)])
def test_edge_connectivity(g, lam):
    assert edge_connectivity(g) == lam


def test_edge_connectivity_large_uses_flow():
    # m > 20 takes the max-flow route; K_7 has 21 edges
    assert complete_graph(7).m > 20
    assert edge_connectivity(complete_graph(7)) == 6


def test_edge_connectivity_rejects_disconnected():
    with pytest.raises(RelgraphError):
        edge_connectivity(build_graph(3, [(0, 1)]))


def test_two_connectivity():
    assert is_two_connected(wagner_graph())
    assert not is_two_connected(path_graph(3))
    bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert cut_vertices(bowtie) == [2]
    assert not is_two_connected(bowtie)


def test_subdivide_examples():
    c3 = cycle_graph(3)
    assert are_isomorphic(subdivide(c3, 1, 1), cycle_graph(4))
    w = wagner_graph()
    assert subdivide(w, 0, 0) == w
    g = subdivide(w, 0, 2)
    assert (g.n, g.m) == (10, 14)
    assert g.edges[0] == (0, 8) and g.edges[-1] == (9, 4)
    assert sum(g.degrees) == 2 * g.m


def test_subdivide_rejects():
    with pytest.raises(RelgraphError):
        subdivide(cycle_graph(3), 3, 1)
    with pytest.raises(RelgraphError):
        subdivide(cycle_graph(3), 0, -1)


def test_edge_list_roundtrip(tmp_path):
    w = wagner_graph()
    path = tmp_path / "w.txt"
    write_edge_list(w, path)
    assert read_edge_list(path) == w
    assert parse_edge_list(format_edge_list(w)) == w


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2  # middle\n2 0\n")
    assert g.edges == ((0, 1), (1, 2), (2, 0))


@pytest.mark.parametrize("text", ["", "3\n", "2 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 0\n", "2 1\n0 1 1\n", "2 1\n0 5\n"])
def test_edge_list_malformed(text):
    with pytest.raises(MalformedGraphFile):
        parse_edge_list(text)
