"""Separated sets, cut typing and induced-cut counts.

An edge set ``F`` separates a vertex set ``S`` when ``F`` holds every edge
with exactly one end in ``S`` and no edge with both ends in ``S``; edges
away from ``S`` may also belong to ``F``. A cut is TypeV if it separates a
single vertex, TypeE if it separates the two ends of an edge but no single
vertex, and TypeN otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from . import kernels
from .chains import ChainDecomposition
from .errors import RelgraphError
from .graphcore import Multigraph, components, cycle_graph, is_connected, path_graph
from .iso import are_isomorphic

TYPE_V = "TypeV"
TYPE_E = "TypeE"
TYPE_N = "TypeN"
FILTERS = (None, "all", TYPE_V, TYPE_E, TYPE_N, "P3", "C4")

# above this size untyped counts skip classification and use the subset kernel
TYPED_ENUMERATION_EDGES = 12

_P3 = path_graph(3)
_C4 = cycle_graph(4)


@dataclass(frozen=True)
class CutClassification:
    cut_type: str
    separated_sets: tuple[frozenset[int], ...]
    subgraph_tags: frozenset[str]

    def matches(self, flt: str | None) -> bool:
        if flt in (None, "all"):
            return True
        if flt in (TYPE_V, TYPE_E, TYPE_N):
            return self.cut_type == flt
        if flt in ("P3", "C4"):
            return self.cut_type == TYPE_N and flt in self.subgraph_tags
        raise RelgraphError(f"unknown cut filter {flt!r}")


def _induced(d: Multigraph, s: Iterable[int]) -> Multigraph:
    verts = sorted(s)
    index = {v: i for i, v in enumerate(verts)}
    return Multigraph(len(verts), tuple((index[d.edges[e][0]], index[d.edges[e][1]]) for e in d.induced_edges(verts)))


def separated_sets(d: Multigraph, cut: Iterable[int]) -> list[frozenset[int]]:
    """Every proper nonempty vertex set that ``cut`` separates."""
    f = set(cut)
    comps = components(d.without_edges(f))
    out = []
    # delta(S) lies in F exactly when S is a union of components of D - F
    for size in range(1, len(comps)):
        for pick in combinations(range(len(comps)), size):
            s = frozenset(v for i in pick for v in comps[i])
            if not any(d.edges[e][0] in s and d.edges[e][1] in s for e in f):
                out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def classify_cut(d: Multigraph, cut: Iterable[int]) -> CutClassification:
    f = frozenset(cut)
    if any(not 0 <= e < d.m for e in f):
        raise RelgraphError("cut refers to an unknown edge")
    if len(components(d.without_edges(f))) < 2:
        raise RelgraphError("edge set is not a cut")
    seps = separated_sets(d, f)
    adjacent = {frozenset(e) for e in d.edges}
    if any(len(s) == 1 for s in seps):
        kind = TYPE_V
    elif any(len(s) == 2 and s in adjacent for s in seps):
        kind = TYPE_E
    else:
        kind = TYPE_N
    tags = set()
    for s in seps:
        if len(s) == 3 and are_isomorphic(_induced(d, s), _P3):
            tags.add("P3")
        elif len(s) == 4 and are_isomorphic(_induced(d, s), _C4):
            tags.add("C4")
    return CutClassification(kind, tuple(seps), frozenset(tags))


@lru_cache(maxsize=256)
def typed_cuts(d: Multigraph, k: int) -> tuple[tuple[tuple[int, ...], CutClassification], ...]:
    """All k-edge-cuts of ``d`` with their classification, in lexicographic order."""
    out = []
    for f in combinations(range(d.m), k):
        if len(components(d.without_edges(f))) > 1:
            out.append((f, classify_cut(d, f)))
    return tuple(out)


def induced_count_from_lengths(
    distillation: Multigraph, lengths: Sequence[int], k: int, flt: str | None = None
) -> int:
    """Sum of products of chain lengths over typed k-cuts of the distillation.

    ``lengths[j]`` is the length of the chain collapsed into distillation
    edge ``j``.
    """
    if flt not in FILTERS:
        raise RelgraphError(f"unknown cut filter {flt!r}")
    if k > distillation.m:
        return 0
    if flt in (None, "all") and distillation.m > TYPED_ENUMERATION_EDGES:
        return _untyped_count(distillation, tuple(lengths), k)
    return sum(
        prod(lengths[e] for e in f) for f, c in typed_cuts(distillation, k) if c.matches(flt)
    )


def _elementary(values: Sequence[int], k: int) -> int:
    e = [1] + [0] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


@lru_cache(maxsize=64)
def _noncut_table(distillation: Multigraph, lengths: tuple[int, ...]) -> tuple[int, ...]:
    us = [u for u, _ in distillation.edges]
    vs = [v for _, v in distillation.edges]
    corank = distillation.m - distillation.n + 1
    try:
        sums = kernels.backend.noncut_sums(distillation.n, us, vs, lengths, corank)
    except OverflowError:
        sums = kernels.pure.noncut_sums(distillation.n, us, vs, lengths, corank)
    return tuple(int(x) for x in sums)


def _untyped_count(distillation: Multigraph, lengths: tuple[int, ...], k: int) -> int:
    # all k-subsets minus the ones leaving D connected; the latter need k <= corank
    if not is_connected(distillation):
        raise RelgraphError("distillation must be connected")
    table = _noncut_table(distillation, lengths)
    keep = table[k] if k < len(table) else 0
    return _elementary(lengths, k) - keep


def induced_cut_count(d: ChainDecomposition, k: int, flt: str | None = None) -> int:
    lengths = [d.lengths[d.edge_map[j]] for j in range(d.distillation.m)]
    return induced_count_from_lengths(d.distillation, lengths, k, flt)
