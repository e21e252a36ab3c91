"""Exact isomorphism testing for small multigraphs.

Joint colour refinement prunes the search; individualisation and
backtracking make the decision exact. Colours are built from nested
integer tuples, whose hashes are stable across processes, so refined
colours of two graphs after the same number of rounds are comparable.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .graphcore import Multigraph

Coloring = list[int]


def _signature_round(g: Multigraph, colors: Coloring) -> Coloring:
    adj = g.adjacency
    return [hash((colors[v], tuple(sorted(colors[w] for w in adj[v])))) for v in range(g.n)]


def _cells(colors: Coloring) -> int:
    return len(set(colors))


def _refine_pair(g: Multigraph, cg: Coloring, h: Multigraph, ch: Coloring):
    """Refine both colourings in lockstep until neither partition splits."""
    ng, nh = _cells(cg), _cells(ch)
    while True:
        cg2 = _signature_round(g, cg)
        ch2 = _signature_round(h, ch)
        ng2, nh2 = _cells(cg2), _cells(ch2)
        cg, ch = cg2, ch2
        if ng2 == ng and nh2 == nh:
            return cg, ch
        ng, nh = ng2, nh2


def refine(g: Multigraph, colors: Coloring | None = None) -> Coloring:
    c = list(colors) if colors is not None else [0] * g.n
    n_cells = _cells(c) if g.n else 0
    while True:
        c2 = _signature_round(g, c)
        if _cells(c2) == n_cells:
            return c2
        c, n_cells = c2, _cells(c2)


def invariant(g: Multigraph) -> tuple:
    """Isomorphism invariant suitable for bucketing before exact tests."""
    colors = refine(g)
    return (g.n, g.m, tuple(sorted(Counter(colors).items())))


def _edge_multiset(edges: Iterable[tuple[int, int]]) -> Counter:
    return Counter((min(u, v), max(u, v)) for u, v in edges)


def _search(g, cg, h, ch, target: Counter, depth: int):
    if Counter(cg) != Counter(ch):
        return None
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(cg):
        classes.setdefault(c, []).append(v)
    nontrivial = [vs for vs in classes.values() if len(vs) > 1]
    if not nontrivial:
        where = {c: v for v, c in enumerate(ch)}
        mapping = [where[c] for c in cg]
        if _edge_multiset((mapping[u], mapping[v]) for u, v in g.edges) == target:
            return mapping
        return None
    cell = min(nontrivial, key=lambda vs: (len(vs), vs[0]))
    u = cell[0]
    colour = cg[u]
    mark = hash(("individualized", depth))
    for v in (w for w, c in enumerate(ch) if c == colour):
        cg2 = list(cg)
        ch2 = list(ch)
        cg2[u] = hash((cg2[u], mark))
        ch2[v] = hash((ch2[v], mark))
        cg2, ch2 = _refine_pair(g, cg2, h, ch2)
        found = _search(g, cg2, h, ch2, target, depth + 1)
        if found is not None:
            return found
    return None


def find_isomorphism(g: Multigraph, h: Multigraph) -> list[int] | None:
    """A vertex bijection ``g -> h`` preserving edge multiplicities, or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    if g.n == 0:
        return []
    cg, ch = _refine_pair(g, [0] * g.n, h, [0] * h.n)
    return _search(g, cg, h, ch, _edge_multiset(h.edges), 0)


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return find_isomorphism(g, h) is not None


def unique_up_to_isomorphism(graphs: Sequence[Multigraph]) -> list[Multigraph]:
    """First representative of each isomorphism class, input order preserved."""
    buckets: dict[tuple, list[Multigraph]] = {}
    reps = []
    for g in graphs:
        bucket = buckets.setdefault(invariant(g), [])
        if any(are_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps
