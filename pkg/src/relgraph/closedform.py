"""Closed-form cut counts on subdivided cubic graphs.

Everything here is exact integer arithmetic. Chain lengths of the extremal
pair are indexed like the Wagner edges: ``l[1]..l[12]`` for ``e_1..e_12``.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .chains import ChainDecomposition, is_vertex_fair
from .cuts import TYPE_E, TYPE_N, TYPE_V, induced_count_from_lengths, induced_cut_count
from .errors import RelgraphError
from .graphcore import CUBE_EDGE_LABELS, WAGNER_EDGE_LABELS, Multigraph, label_edge_id
from .subdivision import SubdivisionSpec, base_graph, gn_lengths, hn_lengths, split_n


def binomial(m: int, k: int) -> int:
    if k < 0:
        raise RelgraphError("k must be nonnegative")
    return comb(m, k) if k <= m else 0


def elementary_symmetric(lengths: Sequence[int], k: int) -> int:
    """Sum over k-subsets of the product of entries, by one DP pass per entry."""
    if k < 0:
        raise RelgraphError("k must be nonnegative")
    e = [1] + [0] * k
    for x in lengths:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def mu_k_from_lengths(distillation: Multigraph, lengths: Sequence[int], k: int) -> int:
    """``C(m,k) - e_k(lengths) + induced k-cuts``, with ``m = sum(lengths)``."""
    m = sum(lengths)
    if not 0 <= k <= m:
        raise RelgraphError(f"k={k} outside 0..{m}")
    return (
        binomial(m, k)
        - elementary_symmetric(lengths, k)
        + induced_count_from_lengths(distillation, lengths, k)
    )


def mu_k_closed(d: ChainDecomposition, k: int) -> int:
    lengths = [d.lengths[d.edge_map[j]] for j in range(d.distillation.m)]
    return mu_k_from_lengths(d.distillation, lengths, k)


# --------------------------------------------------------------------------
# profiles of an edge set X in W or Q

# nontrivial 4-cut families in conventional labels
_Z_SETS = {
    "W": (((1, 2), (3, 4), (5, 6), (7, 8)), ((2, 3), (4, 5), (6, 7), (8, 1)), ((1, 5), (2, 6), (3, 7), (4, 8))),
    "Q": (((2, 3), (4, 5), (6, 7), (8, 1)), ((1, 2), (3, 8), (4, 7), (5, 6)), ((1, 6), (2, 5), (3, 4), (7, 8))),
}
_LABELS = {"W": WAGNER_EDGE_LABELS, "Q": CUBE_EDGE_LABELS}


def z_sets(base: str) -> tuple[frozenset[int], ...]:
    if base not in _Z_SETS:
        raise RelgraphError(f"profiles are defined for W and Q, not {base!r}")
    return tuple(frozenset(label_edge_id(_LABELS[base], p) for p in fam) for fam in _Z_SETS[base])


@dataclass(frozen=True)
class ProfileCounts:
    p: tuple[int, int, int, int]
    q: tuple[int, int, int, int, int]
    z: tuple[int, int, int]


def profile_counts(base: str, x: Iterable[int]) -> ProfileCounts:
    """Vertex, edge and 4-cut-family profiles of ``x`` inside ``base``.

    ``q[j]`` counts edges having exactly ``j`` members of ``x`` among the
    edges sharing one endpoint with them; an edge never counts itself.
    """
    zs = z_sets(base)
    g = base_graph(base)
    xs = set(x)
    if any(not 0 <= e < g.m for e in xs):
        raise RelgraphError("X refers to an unknown edge")
    p = [0] * 4
    for v in range(g.n):
        p[sum(1 for e in g.incidence[v] if e in xs)] += 1
    q = [0] * 5
    for e, (a, b) in enumerate(g.edges):
        neighbours = {f for f in g.incidence[a] + g.incidence[b] if f != e}
        q[sum(1 for f in neighbours if f in xs)] += 1
    z = tuple(len(zk & xs) for zk in zs)
    return ProfileCounts(tuple(p), tuple(q), z)


def _x_from_spec(spec: SubdivisionSpec) -> tuple[int, int, frozenset[int]]:
    lo = min(spec.lengths)
    if max(spec.lengths) - lo > 1:
        raise RelgraphError("lengths are not of the {s, s+1} form")
    s, r = split_n(spec.n)
    x = frozenset(i for i, ell in enumerate(spec.lengths) if ell == s + 1)
    if any(ell not in (s, s + 1) for ell in spec.lengths) or len(x) != r:
        raise RelgraphError(f"lengths do not match s={s}, r={r}")
    return s, r, x


def mu4_parts_closed(spec: SubdivisionSpec, n: int | None = None, *, check_vertex_fair: bool = True):
    """``(mu4V, mu4E, mu4N)`` of a subdivided W or Q from its X-profile."""
    if spec.base not in ("W", "Q"):
        raise RelgraphError("4-cut closed forms cover W and Q only")
    if n is None:
        n = spec.n
    if n != spec.n or n < 8:
        raise RelgraphError(f"n={n} inconsistent with the subdivision (n={spec.n})")
    s, _, x = _x_from_spec(spec)
    if check_vertex_fair and not is_vertex_fair(spec.decomposition()):
        raise RelgraphError("realized graph is not vertex-fair")
    prof = profile_counts(spec.base, x)
    mu_v = sum(prof.p[i] * (s + 1) ** i * s ** (3 - i) * (n + 4 - 3 * s - i) for i in range(4))
    mu_e = sum(prof.q[i] * (s + 1) ** i * s ** (4 - i) for i in range(5))
    families = prof.z if spec.base == "Q" else prof.z[:2]
    mu_n = sum((s + 1) ** z * s ** (4 - z) for z in families)
    return mu_v, mu_e, mu_n


def mu4_closed(spec: SubdivisionSpec, *, check_vertex_fair: bool = True) -> int:
    """Total 4-cut count: ``C(m,4) - e_4 + mu4V + mu4E + mu4N``."""
    parts = mu4_parts_closed(spec, check_vertex_fair=check_vertex_fair)
    return binomial(spec.m, 4) - elementary_symmetric(spec.lengths, 4) + sum(parts)


def induced_parts_oracle(d: ChainDecomposition, k: int) -> tuple[int, int, int]:
    """``(V, E, N)`` induced k-cut counts by typed enumeration."""
    return tuple(induced_cut_count(d, k, t) for t in (TYPE_V, TYPE_E, TYPE_N))


# --------------------------------------------------------------------------
# Type-V 3-cut weights over branch-vertex profiles


def q_of(s: int, j: int) -> int:
    """``(s+1)^j s^(3-j)``: weight of a branch vertex with ``j`` long incident chains."""
    if not 0 <= j <= 3:
        raise RelgraphError("j must lie in 0..3")
    return (s + 1) ** j * s ** (3 - j)


def g_s_value(s: int, x: Sequence[int]) -> int:
    return sum(q_of(s, xj) for xj in x)


# --------------------------------------------------------------------------
# mu_5(G_n) - mu_5(H_n), term by term


@dataclass(frozen=True)
class Mu5DiffTerms:
    a1: int
    a2: int
    a3: int
    a4: int
    a5: int

    @property
    def total(self) -> int:
        return self.a1 + self.a2 + self.a3 + self.a4 + self.a5

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)


def mu5_diff_terms(n: int) -> Mu5DiffTerms:
    if n < 13:
        raise RelgraphError("H_n is defined for n >= 13")
    l = (None,) + gn_lengths(n)  # noqa: E741  1-based like e_1..e_12
    d = l[1] + 1 - l[5]

    def rest(exclude):
        return [l[i] for i in range(1, 13) if i not in exclude]

    def e(exclude, k):
        return elementary_symmetric(rest(exclude), k)

    a1 = (l[5] - l[1] - 1) * e({1, 5}, 3)

    a2 = (
        l[3] * l[6] * l[9] * l[10] + l[4] * l[7] * l[9] * l[10]
        - l[2] * l[3] * l[7] * l[12] - l[3] * l[6] * l[9] * l[12]
        + d * (l[2] * l[7] * l[12] + l[4] * l[7] * l[10] + l[3] * l[6] * l[9]
               + l[2] * l[6] * l[11] + l[4] * l[8] * l[11])
        - d * (l[8] * l[9] * l[10] + l[3] * l[8] * l[12] + l[4] * l[8] * l[11])
        + l[3] * l[12] * (e({1, 3, 5, 12}, 2) + d * e({1, 3, 5, 12}, 1))
        + l[9] * l[10] * (d * e({1, 5, 9, 10}, 1) - e({1, 5, 9, 10}, 2))
        + l[8] * d * e({1, 5, 8}, 2)
    )

    a3 = (
        l[8] * l[9] * l[10] * (n + 4 - l[1] - l[5] - l[8] - l[9] - l[10])
        + l[6] * l[9] * l[12] * (n + 5 - l[3] - 2 * l[5] - l[6] - l[9] - l[12])
        + l[2] * l[3] * l[7] * (n + 5 - l[2] - l[3] - 2 * l[5] - l[7] - l[12])
        - l[3] * l[8] * l[12] * (n + 4 - l[1] - l[3] - l[5] - l[8] - l[12])
        - l[3] * l[6] * l[10] * (n + 3 - 2 * l[1] - l[3] - l[6] - l[9] - l[10])
        - l[4] * l[7] * l[9] * (n + 3 - 2 * l[1] - l[4] - l[7] - l[9] - l[10])
        + l[4] * l[11] * d * (n + 4 - l[1] - l[4] - l[5] - l[8] - l[11])
    )

    a4 = (
        d * (l[2] * l[4] * l[6] + l[6] * l[10] * l[12] + l[7] * l[10] * l[11])
        + l[2] * l[3] * l[4] * l[10] + l[3] * l[6] * l[7] * l[11]
        + l[2] * l[6] * l[7] * l[9] + l[4] * l[7] * l[8] * l[9]
        + l[3] * l[6] * l[8] * l[10] + l[2] * l[9] * l[11] * l[12]
        + l[4] * l[9] * l[10] * l[11]
        - l[2] * l[3] * l[7] * l[8] - l[2] * l[4] * l[9] * l[12]
        - l[3] * l[4] * l[6] * l[7] - l[2] * l[3] * l[10] * l[11]
        - l[3] * l[4] * l[11] * l[12] - l[6] * l[8] * l[9] * l[12]
        - l[7] * l[8] * l[9] * l[11]
    )

    a5 = l[7] * l[9] * l[11] * (n + 5 - 2 * l[5] - l[7] - l[9] - l[11])

    return Mu5DiffTerms(a1, a2, a3, a4, a5)


def mu5_diff_total(n: int) -> int:
    return mu5_diff_terms(n).total


def mu5_diff_oracle(n: int) -> int:
    """Same difference through the general spectrum formula on both graphs."""
    w = base_graph("W")
    return mu_k_from_lengths(w, gn_lengths(n), 5) - mu_k_from_lengths(w, hn_lengths(n), 5)


def mu5_typed_diff(n: int) -> tuple[int, ...]:
    """The five differences computed from typed induced-cut enumeration."""
    ic = induced_count_from_lengths
    w = base_graph("W")
    g, h = gn_lengths(n), hn_lengths(n)
    a1 = elementary_symmetric(h, 5) - elementary_symmetric(g, 5)
    rest = tuple(ic(w, g, 5, t) - ic(w, h, 5, t) for t in (TYPE_V, TYPE_E, "P3", "C4"))
    return (a1,) + rest


def gs_minimizers(two_p: int, r: int, s: int):
    """Minimisers of ``g_s`` over ``{0..3}^(2p)`` with coordinate sum ``2r``, by enumeration."""
    best = None
    argmin = []
    for x in product(range(4), repeat=two_p):
        if sum(x) != 2 * r:
            continue
        val = g_s_value(s, x)
        if best is None or val < best:
            best, argmin = val, [x]
        elif val == best:
            argmin.append(x)
    return best, argmin

