"""Finite undirected multigraphs and the handful of graph algorithms the
rest of the package is built on.

Vertices are ``0..n-1`` and every edge carries a dense integer id given by
its position in :attr:`Multigraph.edges`. Parallel edges are allowed, loops
are not.

The Wagner graph and the cube use fixed conventional labellings; label
``k`` (1..8) is vertex ``k - 1`` and the Wagner edge
``e_i`` is edge id ``i - 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import MalformedGraphFile, RelgraphError

Edge = tuple[int, int]

# Conventional labels; e_1..e_12 in order.
WAGNER_EDGE_LABELS: tuple[Edge, ...] = (
    (1, 5), (3, 7), (2, 6), (4, 8),
    (1, 2), (6, 7), (3, 4), (8, 1),
    (5, 6), (4, 5), (7, 8), (2, 3),
)
# Rim 12,23,...,81 then chords 16,25,38,47.
CUBE_EDGE_LABELS: tuple[Edge, ...] = (
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1),
    (1, 6), (2, 5), (3, 8), (4, 7),
)


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise RelgraphError("vertex count must be nonnegative")
        normalized = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise RelgraphError("loops unsupported")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise RelgraphError(f"edge endpoint out of range: {(u, v)} with n={self.n}")
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in increasing id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour lists with multiplicity (a parallel pair appears twice)."""
        return tuple(
            tuple(self.other_end(e, v) for e in self.incidence[v]) for v in range(self.n)
        )

    def other_end(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        return b if a == v else a

    def is_simple(self) -> bool:
        seen = {frozenset(e) for e in self.edges}
        return len(seen) == self.m

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    def without_edges(self, removed: Iterable[int]) -> "Multigraph":
        drop = set(removed)
        return Multigraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def induced_edges(self, vertices: Iterable[int]) -> list[int]:
        """Ids of edges with both endpoints in ``vertices``."""
        s = set(vertices)
        return [i for i, (u, v) in enumerate(self.edges) if u in s and v in s]


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Multigraph:
    """Multigraph with edge ids assigned in input order."""
    return Multigraph(n, tuple((p[0], p[1]) for p in pairs))


# --------------------------------------------------------------------------
# named graphs


@dataclass(frozen=True)
class NamedGraphSpec:
    kind: str
    parameter: int | None = None

    KINDS = ("path", "cycle", "complete", "mobius", "wagner", "cube")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise RelgraphError(f"unknown graph kind {self.kind!r}")
        minimum = {"path": 1, "cycle": 3, "complete": 1, "mobius": 2}.get(self.kind)
        if minimum is not None:
            if self.parameter is None or self.parameter < minimum:
                raise RelgraphError(f"{self.kind} requires parameter >= {minimum}")


def path_graph(k: int) -> Multigraph:
    return named_graph(NamedGraphSpec("path", k))


def cycle_graph(k: int) -> Multigraph:
    return named_graph(NamedGraphSpec("cycle", k))


def complete_graph(k: int) -> Multigraph:
    return named_graph(NamedGraphSpec("complete", k))


def mobius_graph(p: int) -> Multigraph:
    return named_graph(NamedGraphSpec("mobius", p))


def wagner_graph() -> Multigraph:
    return named_graph(NamedGraphSpec("wagner"))


def cube_graph() -> Multigraph:
    return named_graph(NamedGraphSpec("cube"))


def named_graph(spec: NamedGraphSpec) -> Multigraph:
    k = spec.parameter
    if spec.kind == "path":
        return build_graph(k, [(i, i + 1) for i in range(k - 1)])
    if spec.kind == "cycle":
        return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
    if spec.kind == "complete":
        return build_graph(k, combinations(range(k), 2))
    if spec.kind == "mobius":
        rim = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
        chords = [(i, i + k) for i in range(k)]
        return build_graph(2 * k, rim + chords)
    labels = WAGNER_EDGE_LABELS if spec.kind == "wagner" else CUBE_EDGE_LABELS
    return build_graph(8, [(a - 1, b - 1) for a, b in labels])


def label_edge_id(labels: Sequence[Edge], pair: Edge) -> int:
    """Edge id of the conventionally labelled pair ``pair`` (order-insensitive)."""
    key = frozenset(pair)
    for i, e in enumerate(labels):
        if frozenset(e) == key:
            return i
    raise RelgraphError(f"no edge {pair} in labelled graph")


# --------------------------------------------------------------------------
# connectivity


def components(g: Multigraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Multigraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def cut_vertices(g: Multigraph) -> list[int]:
    """Articulation points via the iterative lowpoint method."""
    disc = [-1] * g.n
    low = [0] * g.n
    result = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, edge id used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent_edge, pos = stack[-1]
            inc = g.incidence[v]
            if pos < len(inc):
                stack[-1] = (v, parent_edge, pos + 1)
                e = inc[pos]
                if e == parent_edge:
                    continue
                w = g.other_end(e, v)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u != root and low[v] >= disc[u]:
                        result.add(u)
        if root_children > 1:
            result.add(root)
    return sorted(result)


def is_two_connected(g: Multigraph) -> bool:
    """At least 3 vertices, connected, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def _max_flow_unit(g: Multigraph, s: int, t: int, limit: int) -> int:
    """Edge-disjoint s-t path count (undirected, unit capacities), capped at ``limit``."""
    # each undirected edge i becomes arcs 2i (u->v) and 2i+1 (v->u) sharing capacity
    flow = [0] * g.m  # +1: pushed u->v, -1: pushed v->u
    total = 0
    while total < limit:
        prev: dict[int, tuple[int, int]] = {s: (-1, 0)}
        queue = deque([s])
        while queue and t not in prev:
            v = queue.popleft()
            for e in g.incidence[v]:
                a, b = g.edges[e]
                w = b if a == v else a
                direction = 1 if a == v else -1
                if w in prev or flow[e] == direction:
                    continue
                prev[w] = (e, direction)
                queue.append(w)
        if t not in prev:
            break
        v = t
        while v != s:
            e, direction = prev[v]
            flow[e] += direction
            a, b = g.edges[e]
            v = a if direction == 1 else b
        total += 1
    return total


def edge_connectivity(g: Multigraph) -> int:
    """Smallest number of edges whose removal disconnects ``g``."""
    if g.n < 2:
        raise RelgraphError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        raise RelgraphError("graph is disconnected")
    if g.m <= 20:
        for k in range(1, g.m + 1):
            for removed in combinations(range(g.m), k):
                if not is_connected(g.without_edges(removed)):
                    return k
        return g.m  # unreachable for n >= 2
    best = min(g.degrees)
    for t in range(1, g.n):
        best = min(best, _max_flow_unit(g, 0, t, best))
    return best


def subdivide(g: Multigraph, edge_id: int, k: int) -> Multigraph:
    """Replace edge ``edge_id`` by a path of ``k + 1`` edges.

    The first segment keeps ``edge_id``; the ``k`` new vertices and the
    remaining ``k`` segments are appended after the existing ones.
    """
    if not 0 <= edge_id < g.m:
        raise RelgraphError(f"invalid edge id {edge_id}")
    if k < 0:
        raise RelgraphError("subdivision count must be nonnegative")
    if k == 0:
        return g
    x, y = g.edges[edge_id]
    new = list(range(g.n, g.n + k))
    edges = list(g.edges)
    edges[edge_id] = (x, new[0])
    chain = new + [y]
    edges.extend((chain[i], chain[i + 1]) for i in range(k))
    return Multigraph(g.n + k, tuple(edges))


# --------------------------------------------------------------------------
# plain-text edge list: "n m" header then m lines "u v"


def format_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise MalformedGraphFile("empty graph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise MalformedGraphFile(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise MalformedGraphFile("header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise MalformedGraphFile(f"header declares {m} edges, found {len(body)}")
    if any(len(r) != 2 for r in body):
        raise MalformedGraphFile("edge lines must be 'u v'")
    try:
        return build_graph(n, body)
    except RelgraphError as exc:
        raise MalformedGraphFile(str(exc)) from None


def read_edge_list(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
