"""Chains, distillations and fairness.

A chain is a maximal path whose inner vertices have degree 2 and whose two
distinct endpoints are branch vertices (degree > 2). Collapsing every chain
of a 2-connected graph with more edges than vertices to a single edge gives
its distillation, a multigraph of minimum degree at least 3.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import RelgraphError
from .graphcore import Multigraph, components, is_two_connected


@dataclass(frozen=True)
class Chain:
    vertex_path: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertex_path[0], self.vertex_path[-1]

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        return self.vertex_path[1:-1]


@dataclass(frozen=True)
class ChainDecomposition:
    """Chains of ``source`` and its distillation.

    Distillation vertex ``i`` is the ``i``-th branch vertex of ``source`` in
    increasing id order (``branch_vertices[i]``); distillation edge ``j``
    collapses chain ``edge_map[j]``, which is always ``j``.
    """

    source: Multigraph
    chains: tuple[Chain, ...]
    distillation: Multigraph
    edge_map: tuple[int, ...]
    branch_vertices: tuple[int, ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(c.length for c in self.chains)

    @cached_property
    def branch_sums(self) -> tuple[int, ...]:
        """Total length of incident chains at each distillation vertex."""
        lengths = self.lengths
        return tuple(
            sum(lengths[self.edge_map[e]] for e in self.distillation.incidence[v])
            for v in range(self.distillation.n)
        )

    def to_report(self) -> dict:
        return {
            "n": self.source.n,
            "m": self.source.m,
            "distillation": {
                "n": self.distillation.n,
                "edges": [list(e) for e in self.distillation.edges],
            },
            "chain_lengths": [self.lengths[self.edge_map[j]] for j in range(self.distillation.m)],
            "branch_vertices": list(self.branch_vertices),
            "fair": is_fair(self),
            "vertex_fair": is_vertex_fair(self),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_report(), sort_keys=True)


def _from_chains(g: Multigraph, chains: list[Chain]) -> ChainDecomposition:
    chains.sort(key=lambda c: min(c.edge_ids))
    branch = tuple(v for v in range(g.n) if g.degrees[v] > 2)
    index = {v: i for i, v in enumerate(branch)}
    d_edges = tuple((index[c.endpoints[0]], index[c.endpoints[1]]) for c in chains)
    return ChainDecomposition(
        source=g,
        chains=tuple(chains),
        distillation=Multigraph(len(branch), d_edges),
        edge_map=tuple(range(len(chains))),
        branch_vertices=branch,
    )


def chain_decomposition(g: Multigraph) -> ChainDecomposition:
    if not g.is_simple():
        raise RelgraphError("chain decomposition needs a simple graph")
    if g.m <= g.n:
        raise RelgraphError(f"chain decomposition needs m > n (got n={g.n}, m={g.m})")
    if min(g.degrees, default=0) <= 1:
        raise RelgraphError("graph has a vertex of degree <= 1")
    if not is_two_connected(g):
        raise RelgraphError("graph is not 2-connected")

    deg = g.degrees
    used = [False] * g.m
    chains = []
    for start in range(g.n):
        if deg[start] <= 2:
            continue
        for first in g.incidence[start]:
            if used[first]:
                continue
            path = [start]
            eids = []
            v, e = start, first
            while True:
                used[e] = True
                eids.append(e)
                v = g.other_end(e, v)
                path.append(v)
                if deg[v] > 2:
                    break
                e = next(x for x in g.incidence[v] if x != e)
            if path[0] == path[-1]:
                raise RelgraphError("chain with equal endpoints; graph is not 2-connected")
            chains.append(Chain(tuple(path), tuple(eids)))
    return _from_chains(g, chains)


def decomposition_from_paths(g: Multigraph, paths: Iterable[tuple[tuple[int, ...], tuple[int, ...]]]) -> ChainDecomposition:
    """Assemble a decomposition from known chain paths without re-deriving them.

    Used for graphs realised from a known subdivision, where walking the
    graph again would only reproduce the paths it was built from.
    """
    return _from_chains(g, [Chain(tuple(p), tuple(e)) for p, e in paths])


def remove_chains(d: ChainDecomposition, subset: Iterable[int]) -> Multigraph:
    """``G`` minus the edges and inner vertices of the chosen chains.

    Surviving vertices are renumbered in increasing order of their old ids;
    chain endpoints are always kept, possibly isolated.
    """
    chosen = set(subset)
    if any(not 0 <= i < len(d.chains) for i in chosen):
        raise RelgraphError("invalid chain index")
    drop_edges = set()
    drop_vertices = set()
    for i in chosen:
        drop_edges.update(d.chains[i].edge_ids)
        drop_vertices.update(d.chains[i].internal_vertices)
    g = d.source
    keep = [v for v in range(g.n) if v not in drop_vertices]
    relabel = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (relabel[u], relabel[v]) for i, (u, v) in enumerate(g.edges) if i not in drop_edges
    )
    return Multigraph(len(keep), edges)


def _spread(values: Iterable[int]) -> int:
    vals = list(values)
    return max(vals) - min(vals) if vals else 0


def is_fair(d: ChainDecomposition) -> bool:
    return _spread(d.lengths) <= 1


def is_vertex_fair(d: ChainDecomposition) -> bool:
    return is_fair(d) and _spread(d.branch_sums) <= 1


def is_disconnected_after_chain_removal(d: ChainDecomposition, subset: Iterable[int]) -> bool:
    return len(components(remove_chains(d, subset))) > 1
