"""Cut spectra, spanning-tree counts and all-terminal reliability.

A k-edge-cut is *any* k-subset of edges whose removal disconnects the graph,
minimal or not, so the spectrum of a connected graph with corank c satisfies
``mu[k] == C(m, k)`` for every ``k > c``.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from . import kernels
from .errors import BudgetExceeded, RelgraphError
from .graphcore import Multigraph, is_connected

MAX_BRUTEFORCE_EDGES = 30


@dataclass(frozen=True)
class CutSpectrum:
    m: int
    mu: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mu) != self.m + 1:
            raise RelgraphError("spectrum must have m + 1 entries")
        for k, x in enumerate(self.mu):
            if not 0 <= x <= comb(self.m, k):
                raise RelgraphError(f"mu[{k}]={x} outside [0, C({self.m},{k})]")

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "mu": [str(x) for x in self.mu]})

    @classmethod
    def from_json(cls, text: str) -> "CutSpectrum":
        obj = json.loads(text)
        return cls(int(obj["m"]), tuple(int(x) for x in obj["mu"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"mu_{k}" for k in range(self.m + 1)])
        writer.writerow(self.mu)
        return buf.getvalue()


# --------------------------------------------------------------------------
# brute force


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _mask_counts(n, us, vs, lo, hi, use_compiled, prune):
    impl = kernels.compiled if use_compiled else kernels.pure
    return impl.cut_counts(n, us, vs, lo, hi, prune)


def _connected_without(n: int, edges: Sequence[tuple[int, int]], removed: set[int]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for j, (a, b) in enumerate(edges):
        if j in removed:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
            if comps == 1:
                return True
    return comps <= 1


def _ranked_count(n: int, edges: tuple[tuple[int, int], ...], k: int, prune: bool = True) -> int:
    m = len(edges)
    if prune and m - k < n - 1:
        # fewer than n - 1 surviving edges can never connect n vertices
        return comb(m, k)
    return sum(
        1 for removed in combinations(range(m), k) if not _connected_without(n, edges, set(removed))
    )


def cut_spectrum_bruteforce(
    g: Multigraph,
    *,
    jobs: int = 1,
    method: str = "auto",
    prune: bool = True,
    max_edges: int = MAX_BRUTEFORCE_EDGES,
) -> CutSpectrum:
    """Exact spectrum by exhaustive enumeration of edge subsets.

    ``method="mask"`` tests every one of the ``2**m`` subsets with the
    subset kernel; ``method="ranked"`` enumerates subsets size by size.
    With ``prune`` (the default) a subset leaving fewer than ``n - 1`` edges
    is counted as a cut without a connectivity test; ``prune=False`` tests
    every subset. ``"auto"`` picks ``mask`` when the compiled kernel is
    available.
    """
    if not is_connected(g):
        raise RelgraphError("cut spectrum needs a connected graph")
    if g.m > max_edges:
        raise BudgetExceeded(
            f"m={g.m} exceeds brute-force budget {max_edges}; use the closed forms instead"
        )
    if method == "auto":
        method = "mask" if kernels.HAVE_COMPILED else "ranked"
    jobs = max(1, jobs)
    if method == "mask":
        us = [u for u, _ in g.edges]
        vs = [v for _, v in g.edges]
        use_compiled = kernels.HAVE_COMPILED
        ranges = _split(1 << g.m, jobs) if jobs > 1 else [(0, 1 << g.m)]
        if len(ranges) == 1:
            parts = [_mask_counts(g.n, us, vs, 0, 1 << g.m, use_compiled, prune)]
        else:
            # the compiled kernel releases the GIL; the pure one needs processes
            pool_cls = ThreadPoolExecutor if use_compiled else ProcessPoolExecutor
            with pool_cls(max_workers=jobs) as pool:
                futures = [
                    pool.submit(_mask_counts, g.n, us, vs, lo, hi, use_compiled, prune)
                    for lo, hi in ranges
                ]
                parts = [f.result() for f in futures]
        mu = [sum(col) for col in zip(*parts)]
    elif method == "ranked":
        ks = list(range(g.m + 1))
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                mu = list(pool.map(_ranked_count, [g.n] * len(ks), [g.edges] * len(ks), ks, [prune] * len(ks)))
        else:
            mu = [_ranked_count(g.n, g.edges, k, prune) for k in ks]
    else:
        raise RelgraphError(f"unknown method {method!r}")
    return CutSpectrum(g.m, tuple(int(x) for x in mu))


# --------------------------------------------------------------------------
# spanning trees


def _bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in a]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def spanning_tree_count(g: Multigraph) -> int:
    """t(G) from the reduced Laplacian (matrix-tree theorem); 0 if disconnected."""
    if g.n == 0:
        raise RelgraphError("spanning tree count needs n >= 1")
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return _bareiss_det(reduced)


def spanning_tree_count_bruteforce(g: Multigraph) -> int:
    """Counts (n-1)-edge subsets that connect every vertex."""
    if g.n == 0:
        raise RelgraphError("spanning tree count needs n >= 1")
    keep = g.n - 1
    total = 0
    for subset in combinations(range(g.m), keep):
        chosen = set(subset)
        removed = set(range(g.m)) - chosen
        if _connected_without(g.n, g.edges, removed):
            total += 1
    return total


# --------------------------------------------------------------------------
# reliability and ordering


def reliability_eval(spec: CutSpectrum, rho) -> Fraction | float:
    """R(rho) = 1 - sum_k mu_k rho^k (1 - rho)^(m-k).

    Rational inputs (int, Fraction, or a string such as ``"1/1000"``) give an
    exact Fraction; a float is converted exactly, evaluated exactly and
    rounded once at the end.
    """
    as_float = isinstance(rho, float)
    r = Fraction(rho)
    if not 0 <= r <= 1:
        raise RelgraphError(f"rho={rho} outside [0, 1]")
    q = 1 - r
    m = spec.m
    fail = sum(mu * r**k * q ** (m - k) for k, mu in enumerate(spec.mu))
    value = 1 - fail
    return float(value) if as_float else value


def lexicographic_compare(a: CutSpectrum, b: CutSpectrum) -> int:
    """-1, 0 or 1 as ``a.mu`` is lexicographically below, equal to or above ``b.mu``."""
    if a.m != b.m:
        raise RelgraphError("spectra have different edge counts")
    for x, y in zip(a.mu, b.mu):
        if x != y:
            return -1 if x < y else 1
    return 0


def first_difference(a: CutSpectrum, b: CutSpectrum) -> int | None:
    if a.m != b.m:
        raise RelgraphError("spectra have different edge counts")
    return next((k for k, (x, y) in enumerate(zip(a.mu, b.mu)) if x != y), None)
