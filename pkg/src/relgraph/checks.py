"""Self-contained verification jobs behind ``relgraph verify``.

Each job recomputes its claim from scratch and returns a
:class:`~relgraph.report.VerificationReport` carrying the witness values.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from itertools import combinations, product

from .chains import chain_decomposition, is_fair, is_vertex_fair
from .closedform import (
    induced_parts_oracle,
    mu4_parts_closed,
    mu5_diff_oracle,
    mu5_diff_terms,
    mu5_typed_diff,
    mu_k_closed,
    q_of,
)
from .cuts import TYPE_N, typed_cuts
from .graphcore import cube_graph, mobius_graph, wagner_graph
from .iso import are_isomorphic
from .report import CONFIRMED, REFUTED, VerificationReport
from .spectrum import cut_spectrum_bruteforce, first_difference, lexicographic_compare, reliability_eval
from .subdivision import SubdivisionSpec, base_graph
from .umrg import (
    construct_gn,
    construct_hn,
    enumerate_class,
    enumerate_cubic,
    has_only_vertex_trivial_3cuts,
    is_min2_characterized,
    is_min3_characterized,
    lexicographic_filter,
)


def _report(claim, params, ok, data, start, columns=None):
    rep = VerificationReport(claim, params, CONFIRMED if ok else REFUTED, data,
                             (time.perf_counter() - start) * 1000)
    rep.columns = columns
    return rep


def verify_mobius(p_max: int = 8, jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    rows = []
    for p in range(2, p_max + 1):
        mu3 = cut_spectrum_bruteforce(mobius_graph(p), jobs=jobs).mu[3]
        rows.append({"p": p, "mu3": mu3, "expected": 2 * p, "match": mu3 == 2 * p})
    return _report("mobius-3cuts", {"p_max": p_max}, all(r["match"] for r in rows),
                   {"rows": rows}, start, ["p", "mu3", "expected", "match"])


def verify_count5() -> VerificationReport:
    """Every nontrivial 5-edge-cut of W is P3- or C4-separating, never both."""
    start = time.perf_counter()
    w = wagner_graph()
    by_type = Counter()
    tags = Counter()
    bad = []
    for f, c in typed_cuts(w, 5):
        by_type[c.cut_type] += 1
        if c.cut_type == TYPE_N:
            key = "+".join(sorted(c.subgraph_tags)) or "untagged"
            tags[key] += 1
            if len(c.subgraph_tags) != 1:
                bad.append([e + 1 for e in f])
    data = {
        "subsets": 792,
        "cuts": sum(by_type.values()),
        "by_type": dict(sorted(by_type.items())),
        "nontrivial_by_tag": dict(sorted(tags.items())),
        "violations": bad,
    }
    return _report("count5", {}, not bad and by_type[TYPE_N] > 0, data, start)


def vertex_fair_sets(base: str, r: int) -> list[frozenset[int]]:
    g = base_graph(base)
    out = []
    for x in combinations(range(g.m), r):
        counts = [sum(1 for e in g.incidence[v] if e in x) for v in range(g.n)]
        if max(counts) - min(counts) <= 1:
            out.append(frozenset(x))
    return out


def verify_mu4(s_values=(1, 2, 3)) -> VerificationReport:
    """Closed-form (mu4V, mu4E, mu4N) against typed enumeration on every vertex-fair X."""
    start = time.perf_counter()
    checked = 0
    mismatches = []
    per_base = Counter()
    for base in ("W", "Q"):
        for r in range(12):
            for x in vertex_fair_sets(base, r):
                for s in s_values:
                    spec = SubdivisionSpec.from_set(base, s, x)
                    d = chain_decomposition(spec.realize())
                    if not is_vertex_fair(d):
                        mismatches.append({"base": base, "X": sorted(x), "s": s, "why": "not vertex-fair"})
                        continue
                    closed = mu4_parts_closed(spec)
                    oracle = induced_parts_oracle(d, 4)
                    checked += 1
                    per_base[base] += 1
                    if tuple(closed) != tuple(oracle):
                        mismatches.append({"base": base, "X": sorted(x), "s": s,
                                           "closed": list(closed), "oracle": list(oracle)})
    data = {"checked": checked, "per_base": dict(per_base), "mismatches": mismatches}
    return _report("mu4-closed-forms", {"s_values": list(s_values)}, checked > 0 and not mismatches, data, start)


def verify_census8() -> VerificationReport:
    start = time.perf_counter()
    cubic = enumerate_cubic(8)
    good = [g for g in cubic if has_only_vertex_trivial_3cuts(g)]
    w, q = wagner_graph(), cube_graph()
    named = sorted(("W" if are_isomorphic(g, w) else "Q" if are_isomorphic(g, q) else "other") for g in good)
    data = {
        "cubic_classes": len(cubic),
        "vertex_trivial_3cut_classes": len(good),
        "identified": named,
        "graphs": [[list(e) for e in g.edges] for g in cubic],
    }
    return _report("census8", {"n": 8}, len(cubic) == 5 and named == ["Q", "W"], data, start)


def verify_mincuts_c68(budget: int = 200_000, jobs: int = 1) -> VerificationReport:
    """Brute-force C^2 and C^3 of C_{6,8} against the min2 / min3 characterisations."""
    start = time.perf_counter()
    classes = enumerate_class(6, 8, budget)
    spectra = [cut_spectrum_bruteforce(g, jobs=jobs).mu for g in classes]
    lookup = {id(g): s for g, s in zip(classes, spectra)}
    c2 = lexicographic_filter(classes, 2, lambda g: lookup[id(g)])
    c3 = lexicographic_filter(c2.survivors, 3, lambda g: lookup[id(g)])
    idx2 = sorted(classes.index(g) for g in c2.survivors)
    idx3 = sorted(classes.index(g) for g in c3.survivors)
    pred2 = [i for i, g in enumerate(classes) if is_min2_characterized(g)]
    pred3 = [i for i, g in enumerate(classes) if is_min3_characterized(g)]
    min_mu2 = min(s[2] for s in spectra)
    plain_min2 = [i for i, s in enumerate(spectra) if s[2] == min_mu2]
    data = {
        "classes": len(classes),
        "min_mu2_set": idx2,
        "min2_characterized": pred2,
        "plain_argmin_mu2": plain_min2,
        "min_mu3_set": idx3,
        "min3_characterized": pred3,
        "survivor_spectra": {str(i): list(spectra[i]) for i in idx2},
        "survivor_edges": {str(i): [list(e) for e in classes[i].edges] for i in idx2},
    }
    ok = idx2 == pred2 == plain_min2 and idx3 == pred3 and bool(idx3)
    return _report("mincuts-c68", {"n": 6, "m": 8}, ok, data, start)


def verify_technical(two_ps=(4, 6, 8), s_values=(1, 2, 3)) -> VerificationReport:
    """Minimisers of g_s over S_{p,r} are exactly the fair tuples of that set."""
    start = time.perf_counter()
    rows = []
    for two_p in two_ps:
        p = two_p // 2
        # every tuple of S_{p,r}, bucketed by coordinate sum, enumerated once per 2p
        by_sum = {}
        for x in product(range(4), repeat=two_p):
            by_sum.setdefault(sum(x), []).append(x)
        for s in s_values:
            qs = [q_of(s, j) for j in range(4)]
            increasing = qs[0] < qs[1] < qs[2] < qs[3]
            for r in range(3 * p):
                tuples = by_sum.get(2 * r, [])
                vals = [sum(qs[v] for v in x) for x in tuples]
                best = min(vals)
                argmin = {x for x, v in zip(tuples, vals) if v == best}
                fair = {x for x in tuples if max(x) - min(x) <= 1}
                rows.append({"2p": two_p, "s": s, "r": r, "min": best, "minimizers": len(argmin),
                             "fair": len(fair), "match": argmin == fair and increasing})
    return _report("technical", {"2p": list(two_ps), "s": list(s_values)}, all(r["match"] for r in rows),
                   {"rows": rows}, start, ["2p", "s", "r", "min", "minimizers", "fair", "match"])


def _random_fair_lengths(rng: random.Random, t: int, m: int) -> tuple[int, ...]:
    s, r = divmod(m, t)
    longer = set(rng.sample(range(t), r))
    return tuple(s + 1 if i in longer else s for i in range(t))


def chain_formula_corpus(seed: int = 0, max_edges: int = 24, per_family: int = 6):
    """(name, graph) pairs: G_n, H_n for 13..20, Mobius graphs and fair subdivisions."""
    rng = random.Random(seed)
    out = []
    for n in range(13, 21):
        out.append((f"G_{n}", construct_gn(n)))
        out.append((f"H_{n}", construct_hn(n)))
    for p in range(2, 9):
        if 3 * p <= max_edges:
            out.append((f"M_{p}", mobius_graph(p)))
    for p in range(2, 9):
        t = 3 * p
        for _ in range(per_family // 2):
            if t + 1 > max_edges:
                break
            m = rng.randint(t + 1, max_edges)
            spec = SubdivisionSpec(f"M{p}", _random_fair_lengths(rng, t, m))
            out.append((f"M{p}{list(spec.lengths)}", spec.realize()))
    for base in ("W", "Q"):
        for _ in range(per_family):
            m = rng.randint(13, max_edges)
            spec = SubdivisionSpec(base, _random_fair_lengths(rng, 12, m))
            out.append((f"{base}{list(spec.lengths)}", spec.realize()))
    return out


def verify_chain_formula(graphs=None, seed: int = 0, jobs: int = 1) -> VerificationReport:
    """General chain formula against exhaustive enumeration at every k."""
    start = time.perf_counter()
    corpus = graphs if graphs is not None else chain_formula_corpus(seed)
    rows = []
    for name, g in corpus:
        d = chain_decomposition(g)
        brute = cut_spectrum_bruteforce(g, jobs=jobs).mu
        closed = tuple(mu_k_closed(d, k) for k in range(g.m + 1))
        diff = [k for k in range(g.m + 1) if brute[k] != closed[k]]
        rows.append({"graph": name, "n": g.n, "m": g.m, "fair": is_fair(d), "match": not diff,
                     "mismatch_k": diff, "mu_0_5": list(brute[:6])})
    return _report("chain-formula", {"seed": seed, "graphs": len(corpus)}, all(r["match"] for r in rows),
                   {"rows": rows}, start, ["graph", "n", "m", "fair", "match"])


def verify_mu5_terms(n_max: int = 300, brute_max: int = 20, jobs: int = 1) -> VerificationReport:
    """Term sum against the chain formula for 13..n_max and brute force for 13..brute_max."""
    start = time.perf_counter()
    rows = []
    for n in range(13, n_max + 1):
        terms = mu5_diff_terms(n)
        row = {"n": n, "total": terms.total, "chain": mu5_diff_oracle(n),
               "typed_match": terms.as_tuple() == mu5_typed_diff(n)}
        if n <= brute_max:
            gs = cut_spectrum_bruteforce(construct_gn(n), jobs=jobs).mu[5]
            hs = cut_spectrum_bruteforce(construct_hn(n), jobs=jobs).mu[5]
            row["brute"] = gs - hs
        else:
            row["brute"] = None
        row["match"] = row["total"] == row["chain"] and row["brute"] in (None, row["total"])
        rows.append(row)
    ok = all(r["match"] for r in rows)
    return _report("mu5-terms", {"n_max": n_max, "brute_max": brute_max}, ok, {"rows": rows}, start,
                   ["n", "total", "chain", "brute", "typed_match", "match"])


def gn_hn_reliability_order(n_lo: int = 13, n_hi: int = 20, rho="1/1000", jobs: int = 1) -> VerificationReport:
    """Lexicographically smaller spectrum has strictly larger reliability at small rho."""
    start = time.perf_counter()
    rows = []
    for n in range(n_lo, n_hi + 1):
        sg = cut_spectrum_bruteforce(construct_gn(n), jobs=jobs)
        sh = cut_spectrum_bruteforce(construct_hn(n), jobs=jobs)
        order = lexicographic_compare(sg, sh)
        rg, rh = reliability_eval(sg, rho), reliability_eval(sh, rho)
        ok = (order < 0 and rg > rh) or (order > 0 and rh > rg)
        rows.append({"n": n, "order": order, "first_difference": first_difference(sg, sh),
                     "R_G_minus_R_H": str(rg - rh), "match": ok})
    return _report("reliability-order", {"rho": str(rho)}, all(r["match"] for r in rows), {"rows": rows},
                   start, ["n", "order", "first_difference", "R_G_minus_R_H", "match"])

