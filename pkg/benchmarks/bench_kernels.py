"""Compare the compiled and pure-Python subset kernels on the same graphs.

    python3 benchmarks/bench_kernels.py [--max-edges 20] [--repeat 3]
"""
import argparse
import time

from relgraph import kernels
from relgraph.graphcore import complete_graph, mobius_graph, wagner_graph
from relgraph.umrg import construct_gn


def _time(impl, g, prune, repeat):
    us = [u for u, _ in g.edges]
    vs = [v for _, v in g.edges]
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = impl.cut_counts(g.n, us, vs, 0, 1 << g.m, prune)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-edges", type=int, default=20, help="skip graphs with more edges (pure side is slow)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graphs = [
        ("K5", complete_graph(5)),
        ("W", wagner_graph()),
        ("M5", mobius_graph(5)),
        ("K6", complete_graph(6)),
        ("G13", construct_gn(13)),
        ("M6", mobius_graph(6)),
    ]
    if kernels.compiled is None:
        print("compiled kernel unavailable; timing the pure kernel only")
    print(f"{'graph':>6} {'m':>3} {'prune':>5} {'pure_s':>10} {'compiled_s':>11} {'speedup':>8}")
    for name, g in graphs:
        if g.m > args.max_edges:
            continue
        for prune in (False, True):
            tp, rp = _time(kernels.pure, g, prune, args.repeat)
            if kernels.compiled is not None:
                tc, rc = _time(kernels.compiled, g, prune, args.repeat)
                assert list(rc) == list(rp), f"kernels disagree on {name}"
                print(f"{name:>6} {g.m:>3} {str(prune):>5} {tp:>10.4f} {tc:>11.5f} {tp / tc:>7.0f}x")
            else:
                print(f"{name:>6} {g.m:>3} {str(prune):>5} {tp:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
