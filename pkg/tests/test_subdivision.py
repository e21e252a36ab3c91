import pytest

from oracles import nx_isomorphic
from relgraph.chains import chain_decomposition, is_fair, is_vertex_fair
from relgraph.closedform import mu5_diff_total
from relgraph.errors import RelgraphError
from relgraph.graphcore import wagner_graph
from relgraph.spectrum import cut_spectrum_bruteforce
from relgraph.subdivision import (
    SubdivisionSpec,
    base_graph,
    gn_lengths,
    hn_lengths,
    hn_spec,
    realize_lengths,
    split_n,
    x_r,
)
from relgraph.umrg import construct_gn, construct_hn


def test_split_and_x_r():
    assert split_n(8) == (1, 0) and split_n(13) == (1, 5) and split_n(20) == (2, 0)
    assert x_r(0) == frozenset() and x_r(5) == frozenset(range(5))
    assert sorted(i + 1 for i in x_r(8)) == [1, 2, 3, 4, 6, 8, 10, 12]
    with pytest.raises(RelgraphError):
        x_r(12)


def test_gn_lengths():
    assert gn_lengths(8) == (1,) * 12
    assert gn_lengths(20) == (2,) * 12
    assert gn_lengths(13) == (2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(RelgraphError):
        gn_lengths(7)


def test_hn_lengths():
    assert hn_lengths(13) == (3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1)
    assert hn_lengths(20) == (3, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2)
    with pytest.raises(RelgraphError):
        hn_lengths(12)


@pytest.mark.parametrize("n", range(8, 40))
def test_gn_shape(n):
    g = construct_gn(n)
    d = chain_decomposition(g)
    assert (g.n, g.m) == (n, n + 4) and g.is_simple()
    assert is_fair(d) and is_vertex_fair(d)
    assert nx_isomorphic(d.distillation, wagner_graph())


@pytest.mark.parametrize("n", [n for n in range(13, 40) if n != 16])
def test_hn_shape(n):
    g = construct_hn(n)
    d = chain_decomposition(g)
    assert (g.n, g.m) == (n, n + 4) and g.is_simple() and not is_fair(d)
    assert nx_isomorphic(d.distillation, wagner_graph())


def test_h16_contracts_e5():
    # s=1, r=8: e5 is outside X_8 so its chain length drops to zero
    assert hn_lengths(16)[4] == 0
    with pytest.raises(RelgraphError):
        hn_spec(16)
    g = construct_hn(16)
    assert (g.n, g.m) == (16, 20) and g.is_simple()
    expected = realize_lengths("W", (1,) * 4 + (0,) + (1,) * 7)
    assert chain_decomposition(g).distillation.m == 11
    assert nx_isomorphic(chain_decomposition(g).distillation, expected)
    brute = cut_spectrum_bruteforce(construct_gn(16)).mu[5] - cut_spectrum_bruteforce(g).mu[5]
    assert brute == mu5_diff_total(16) == -392


def test_realize_lengths_matches_spec_when_positive():
    lengths = (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3)
    assert realize_lengths("W", lengths) == SubdivisionSpec("W", lengths).realize()


def test_realize_lengths_rejections():
    with pytest.raises(RelgraphError):
        realize_lengths("W", (1,) * 11)
    with pytest.raises(RelgraphError):
        realize_lengths("W", (-1,) + (1,) * 11)
    # contracting all of the 8-cycle closes a cycle
    with pytest.raises(RelgraphError):
        realize_lengths("W", (0,) * 8 + (1,) * 4)


def test_spec_basics():
    spec = SubdivisionSpec.from_set("Q", 2, [0, 3])
    assert spec.lengths == (3, 2, 2, 3) + (2,) * 8
    assert spec.m == sum(spec.lengths) and spec.n == spec.realize().n
    d = spec.decomposition()
    assert d.lengths == chain_decomposition(spec.realize()).lengths
    assert base_graph("M5").m == 15
    with pytest.raises(RelgraphError):
        base_graph("K9")
    with pytest.raises(RelgraphError):
        SubdivisionSpec("W", (1,) * 11)
    with pytest.raises(RelgraphError):
        SubdivisionSpec("W", (0,) + (1,) * 11)


def test_first_segment_keeps_base_id():
    g = SubdivisionSpec("W", (3,) + (1,) * 11).realize()
    assert g.edges[0] == (0, 8) and g.edges[-1] == (9, 4)
