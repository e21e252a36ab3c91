import os
import random
import subprocess
import sys

import pytest

from relgraph import _cutkernel_py as pure
from relgraph import kernels
from relgraph.graphcore import mobius_graph, wagner_graph
from relgraph.umrg import construct_hn

compiled = kernels.compiled
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


def _split(g):
    return [u for u, _ in g.edges], [v for _, v in g.edges]


@needs_compiled
@pytest.mark.parametrize("prune", [False, True])
def test_cut_counts_agree(prune):
    for g in (wagner_graph(), mobius_graph(3), construct_hn(13)):
        us, vs = _split(g)
        hi = 1 << g.m
        assert compiled.cut_counts(g.n, us, vs, 0, hi, prune) == pure.cut_counts(g.n, us, vs, 0, hi, prune)
        mid = hi // 3
        parts = [a + b for a, b in zip(compiled.cut_counts(g.n, us, vs, 0, mid, prune),
                                       compiled.cut_counts(g.n, us, vs, mid, hi, prune))]
        assert parts == compiled.cut_counts(g.n, us, vs, 0, hi, prune)


@needs_compiled
def test_noncut_sums_agree():
    rng = random.Random(3)
    for g in (wagner_graph(), mobius_graph(6)):
        us, vs = _split(g)
        w = [rng.randint(1, 9) for _ in range(g.m)]
        k = g.m - g.n + 1
        assert compiled.noncut_sums(g.n, us, vs, w, k) == pure.noncut_sums(g.n, us, vs, w, k)


@needs_compiled
def test_noncut_overflow():
    g = mobius_graph(6)
    us, vs = _split(g)
    with pytest.raises(OverflowError):
        compiled.noncut_sums(g.n, us, vs, [1 << 40] * g.m, 6)
    assert pure.noncut_sums(g.n, us, vs, [1 << 40] * g.m, 2)[2] > 1 << 64


@needs_compiled
def test_compiled_rejects_bad_ranges():
    us, vs = _split(wagner_graph())
    with pytest.raises(ValueError):
        compiled.cut_counts(8, us, vs, 0, 1 << 13)


def test_noncut_unit_weights_end_in_tree_count():
    g = mobius_graph(4)
    us, vs = _split(g)
    sums = pure.noncut_sums(g.n, us, vs, [1] * g.m, g.m - g.n + 1)
    assert sums[0] == 1 and sums[-1] == 392


def test_pure_env_switch():
    code = "from relgraph import kernels; print(kernels.backend.__name__, kernels.HAVE_COMPILED)"
    env = dict(os.environ, RELGRAPH_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True).stdout
    assert out.split() == ["relgraph._cutkernel_py", "False"]
