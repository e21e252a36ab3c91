"""Cubic base graphs with prescribed chain lengths.

``SubdivisionSpec("W", lengths)`` is the Wagner graph with edge ``e_i``
replaced by a path of ``lengths[i - 1]`` edges. The extremal family uses
``n + 4 = 12 s + r`` with ``0 <= r < 12``: chains in a set ``X_r`` get length
``s + 1`` and the rest length ``s``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .chains import ChainDecomposition, decomposition_from_paths
from .errors import RelgraphError
from .graphcore import Multigraph, cube_graph, mobius_graph, wagner_graph

_MOBIUS = re.compile(r"^M(\d+)$")


def base_graph(base: str) -> Multigraph:
    if base == "W":
        return wagner_graph()
    if base == "Q":
        return cube_graph()
    match = _MOBIUS.match(base)
    if match:
        return mobius_graph(int(match.group(1)))
    raise RelgraphError(f"unknown base graph {base!r}")


@dataclass(frozen=True)
class SubdivisionSpec:
    base: str
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        g = base_graph(self.base)
        if len(self.lengths) != g.m:
            raise RelgraphError(f"{self.base} has {g.m} edges, got {len(self.lengths)} lengths")
        if any(x < 1 for x in self.lengths):
            raise RelgraphError("chain lengths must be positive")

    @classmethod
    def from_set(cls, base: str, s: int, x: Iterable[int]) -> "SubdivisionSpec":
        """Base ``H`` subdivided ``s`` times on edges in ``x`` and ``s - 1`` times elsewhere."""
        chosen = set(x)
        m = base_graph(base).m
        return cls(base, tuple(s + 1 if i in chosen else s for i in range(m)))

    @property
    def base_graph(self) -> Multigraph:
        return base_graph(self.base)

    @property
    def m(self) -> int:
        return sum(self.lengths)

    @property
    def n(self) -> int:
        b = self.base_graph
        return b.n + sum(x - 1 for x in self.lengths)

    def _paths(self):
        b = self.base_graph
        edges = list(b.edges)
        next_vertex = b.n
        paths = []
        for i, (x, y) in enumerate(b.edges):
            k = self.lengths[i] - 1
            inner = list(range(next_vertex, next_vertex + k))
            next_vertex += k
            verts = [x] + inner + [y]
            ids = [i]
            if k:
                edges[i] = (x, inner[0])
                for j in range(k):
                    ids.append(len(edges))
                    edges.append((verts[j + 1], verts[j + 2]))
            paths.append((tuple(verts), tuple(ids)))
        return Multigraph(next_vertex, tuple(edges)), paths

    @cached_property
    def graph(self) -> Multigraph:
        return self._paths()[0]

    def realize(self) -> Multigraph:
        """The subdivided graph; base edge ids keep the first segment of each chain."""
        return self.graph

    def decomposition(self) -> ChainDecomposition:
        """Chain decomposition assembled from the known construction."""
        g, paths = self._paths()
        return decomposition_from_paths(g, paths)


def split_n(n: int) -> tuple[int, int]:
    """``(s, r)`` with ``n + 4 = 12 s + r`` and ``0 <= r < 12``."""
    return divmod(n + 4, 12)


def x_r(r: int) -> frozenset[int]:
    """Edge ids of the set ``X_r`` (``e_i`` is id ``i - 1``)."""
    if not 0 <= r <= 11:
        raise RelgraphError("r must lie in 0..11")
    if r == 0:
        return frozenset()
    if r == 8:
        return frozenset(i - 1 for i in (1, 2, 3, 4, 6, 8, 10, 12))
    return frozenset(range(r))


def gn_lengths(n: int) -> tuple[int, ...]:
    if n < 8:
        raise RelgraphError("G_n is defined for n >= 8")
    s, r = split_n(n)
    xs = x_r(r)
    return tuple(s + 1 if i in xs else s for i in range(12))


def hn_lengths(n: int) -> tuple[int, ...]:
    if n < 13:
        raise RelgraphError("H_n is defined for n >= 13 (the fifth chain would vanish)")
    ls = list(gn_lengths(n))
    ls[0] += 1
    ls[4] -= 1
    return tuple(ls)


def gn_spec(n: int) -> SubdivisionSpec:
    return SubdivisionSpec("W", gn_lengths(n))


def hn_spec(n: int) -> SubdivisionSpec:
    return SubdivisionSpec("W", hn_lengths(n))


def realize_lengths(base: str, lengths: Iterable[int]) -> Multigraph:
    """Like ``SubdivisionSpec(base, lengths).realize()``, but a zero length contracts that edge.

    Contracted endpoints are merged (the smaller label survives) and
    the surviving vertices are renumbered in order before chain vertices are
    appended. The result must stay loopless.
    """
    lengths = tuple(int(x) for x in lengths)
    if all(x >= 1 for x in lengths):
        return SubdivisionSpec(base, lengths).realize()
    b = base_graph(base)
    if len(lengths) != b.m or any(x < 0 for x in lengths):
        raise RelgraphError("need one nonnegative length per base edge")
    root = list(range(b.n))

    def find(v):
        while root[v] != v:
            v = root[v]
        return v

    for (x, y), ell in zip(b.edges, lengths):
        if ell == 0:
            rx, ry = sorted((find(x), find(y)))
            if rx == ry:
                raise RelgraphError("contracted edges close a cycle")
            root[ry] = rx
    keep = sorted({find(v) for v in range(b.n)})
    index = {v: i for i, v in enumerate(keep)}
    next_vertex = len(keep)
    edges = []
    for (x, y), ell in zip(b.edges, lengths):
        if ell == 0:
            continue
        u, v = index[find(x)], index[find(y)]
        if u == v:
            raise RelgraphError("contraction creates a loop")
        prev = u
        for _ in range(ell - 1):
            edges.append((prev, next_vertex))
            prev = next_vertex
            next_vertex += 1
        edges.append((prev, v))
    return Multigraph(next_vertex, tuple(edges))
