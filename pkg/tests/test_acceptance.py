"""The thirteen acceptance criteria, each at its stated tolerance."""
import time
from fractions import Fraction
from itertools import combinations

import pytest

from oracles import spanning_trees_naive
from relgraph import checks, cuts
from relgraph.graphcore import build_graph, is_connected
from relgraph.iso import are_isomorphic
from relgraph.spectrum import spanning_tree_count
from relgraph.subdivision import SubdivisionSpec
from relgraph.umrg import a5_growth, find_threshold, verify_prop_min4

acceptance = pytest.mark.acceptance


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@acceptance(1, "Mobius ladders have mu3(M_p) = 2p for p = 2..8, under 1 s")
def test_mobius_3cuts():
    with Timer() as t:
        rep = checks.verify_mobius(8)
    assert [r["mu3"] for r in rep.data["rows"]] == [2 * p for p in range(2, 9)]
    assert rep.confirmed and t.seconds < 1


@acceptance(2, "8-vertex cubic census: 5 classes, exactly W and Q with vertex-trivial 3-cuts, under 1 min")
def test_cubic_census():
    with Timer() as t:
        rep = checks.verify_census8()
    assert rep.data["cubic_classes"] == 5
    assert rep.data["identified"] == ["Q", "W"]
    assert rep.confirmed and t.seconds < 60


@acceptance(3, "every nontrivial 5-cut of W is P3- or C4-separating, exclusively, under 1 s")
def test_count5():
    cuts.typed_cuts.cache_clear()
    with Timer() as t:
        rep = checks.verify_count5()
    assert rep.data["subsets"] == 792 and rep.data["violations"] == []
    assert set(rep.data["nontrivial_by_tag"]) == {"P3", "C4"}
    assert rep.confirmed and t.seconds < 1


@acceptance(4, "chain formula equals brute force at every k on the G_n/H_n, Mobius and fair corpus, under 10 min")
def test_chain_formula_oracle():
    corpus = checks.chain_formula_corpus(0)
    names = {name for name, _ in corpus}
    assert {f"G_{n}" for n in range(13, 21)} <= names and {f"H_{n}" for n in range(13, 21)} <= names
    assert all(g.m <= 24 for _, g in corpus)
    with Timer() as t:
        rep = checks.verify_chain_formula(corpus)
    bad = [r["graph"] for r in rep.data["rows"] if not r["match"]]
    assert bad == [] and rep.confirmed and t.seconds < 600


@acceptance(5, "4-cut closed forms (V, E, N) equal typed enumeration for every vertex-fair X over W and Q, under 1 min")
def test_mu4_closed_forms():
    with Timer() as t:
        rep = checks.verify_mu4((1, 2, 3))
    assert rep.data["mismatches"] == [] and rep.data["checked"] > 0
    assert rep.confirmed and t.seconds < 60


@acceptance(6, "unique mu4 minimiser among vertex-fair subdivisions of Q and W is G_n for n = 8..120, under 2 min")
def test_min4_window():
    failures = []
    with Timer() as t:
        for n in range(8, 121):
            rep = verify_prop_min4(n)
            if not rep.confirmed:
                failures.append((n, [m["X"] for m in rep.data["minimizers"]]))
    assert t.seconds < 120
    assert failures == []


@acceptance(7, "a1+..+a5 equals the chain-formula difference for n = 13..300 and brute force for n = 13..20")
def test_mu5_term_decomposition():
    rep = checks.verify_mu5_terms(300, brute_max=20)
    rows = rep.data["rows"]
    assert [r["n"] for r in rows] == list(range(13, 301))
    assert all(r["total"] == r["chain"] for r in rows)
    assert all(r["brute"] == r["total"] for r in rows if r["n"] <= 20)
    assert rep.confirmed


@acceptance(8, "mu5(G_n) - mu5(H_n) > 0 for every 167 <= n <= 5000, under 1 min")
def test_threshold():
    with Timer() as t:
        rep = find_threshold(5000)
    rows = rep.data["rows"]
    assert all(r["total"] > 0 for r in rows if r["n"] >= 167)
    assert rep.data["oracle_mismatches"] == []
    assert len(rep.data["nonpositive_below_claim"]) + sum(1 for r in rows if 13 <= r["n"] < 167 and r["total"] > 0) == 154
    assert rep.confirmed and t.seconds < 60


@acceptance(9, "|a5(n) / (7 floor(n/12)^4) - 1| <= 0.15 for all 1200 <= n <= 5000")
def test_a5_growth():
    rep = a5_growth(1200, 5000, tolerance=0.15)
    assert float(rep.data["max_relative_deviation"]) <= 0.15
    assert rep.confirmed


@acceptance(10, "on C_{6,8} the brute-force min-mu2 and min-mu3 sets match the characterisations, under 5 min")
def test_min2_min3_ground_truth():
    with Timer() as t:
        rep = checks.verify_mincuts_c68()
    d = rep.data
    assert d["min_mu2_set"] == d["min2_characterized"] and d["min_mu2_set"]
    assert d["min_mu3_set"] == d["min3_characterized"] and d["min_mu3_set"]
    assert rep.confirmed and t.seconds < 300


@acceptance(11, "g_s over S_{p,r} is minimised exactly at fair tuples and q_0 < q_1 < q_2 < q_3, under 10 s")
def test_technical():
    with Timer() as t:
        rep = checks.verify_technical((4, 6, 8), (1, 2, 3))
    rows = rep.data["rows"]
    assert {(r["2p"], r["s"]) for r in rows} == {(a, b) for a in (4, 6, 8) for b in (1, 2, 3)}
    assert all(r["match"] for r in rows)
    assert rep.confirmed and t.seconds < 10


@acceptance(12, "matrix-tree count equals spanning-tree enumeration on every connected graph with <= 5 vertices, under 1 min")
def test_matrix_tree_oracle():
    checked = 0
    with Timer() as t:
        for n in range(1, 6):
            pairs = list(combinations(range(n), 2))
            for size in range(len(pairs) + 1):
                for edges in combinations(pairs, size):
                    g = build_graph(n, edges)
                    if not is_connected(g):
                        continue
                    assert spanning_tree_count(g) == spanning_trees_naive(g), (n, edges)
                    checked += 1
    # labelled connected graphs on 1..5 vertices
    assert checked == 1 + 1 + 4 + 38 + 728
    assert t.seconds < 60


@acceptance(13, "on G_n/H_n for n = 13..20 the lexicographically smaller spectrum has larger reliability at rho = 1/1000")
def test_reliability_order():
    rep = checks.gn_hn_reliability_order(13, 20, rho=Fraction(1, 1000))
    for r in rep.data["rows"]:
        diff = Fraction(r["R_G_minus_R_H"])
        assert diff != 0
        assert (r["order"] < 0) == (diff > 0)
    assert rep.confirmed


def test_min4_counterexample_is_genuine():
    rep = verify_prop_min4(13)
    a, b = (SubdivisionSpec("W", m["lengths"]).realize() for m in rep.data["minimizers"])
    assert not are_isomorphic(a, b)
