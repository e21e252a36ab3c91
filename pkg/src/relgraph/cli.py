"""Command-line front end.

Exit status: 0 success or confirmed, 1 usage error or unreadable input,
2 refuted, 3 out of budget. Failures print a single line on stderr of the
form ``relgraph: <kind>: <detail>``.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import checks, umrg
from .chains import chain_decomposition
from .errors import BudgetExceeded, MalformedGraphFile, RelgraphError
from .graphcore import cube_graph, format_edge_list, mobius_graph, read_edge_list, wagner_graph
from .report import EXIT_CODES, CommandResult, VerificationReport
from .spectrum import cut_spectrum_bruteforce, reliability_eval, spanning_tree_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_BUDGET = 3

DEFAULT_SUBSET_BUDGET = 1 << 26
EXPENSIVE_SUBSET_BUDGET = 1 << 30
VERIFY_JOBS = (
    "count5", "mu4", "min4", "mincuts-c68", "census8", "eq1", "technical",
    "mobius", "mu5-terms", "growth", "reliability-order", "strategy",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fail(kind: str, detail) -> None:
    text = " ".join(str(detail).split())
    sys.stderr.write(f"relgraph: {kind}: {text}\n")


def _int_at_least(lo):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {value}")
        return value
    return parse


def _jobs_default() -> int:
    raw = os.environ.get("RELGRAPH_JOBS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"RELGRAPH_JOBS={raw!r} is not an integer")
    if value < 1:
        raise UsageError("RELGRAPH_JOBS must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=_int_at_least(1), default=None,
                        help="worker count (default: $RELGRAPH_JOBS or 1)")
    common.add_argument("--budget", type=_int_at_least(0), default=None,
                        help="maximum enumeration size")
    common.add_argument("--expensive", action="store_true", help="enable long-running jobs")
    common.add_argument("--seed", type=int, default=0, help="seed for generated corpora")
    common.add_argument("--timing", action="store_true", help="report runtime_ms (breaks byte-identity)")

    parser = _Parser(prog="relgraph", description="Exact cut spectra and reliability checks on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="brute-force cut spectrum")
    p.add_argument("file")
    p.add_argument("--method", choices=("auto", "mask", "ranked"), default="auto")

    p = sub.add_parser("trees", parents=[common], help="spanning-tree count")
    p.add_argument("file")

    p = sub.add_parser("chains", parents=[common], help="chain decomposition")
    p.add_argument("file")

    p = sub.add_parser("reliability", parents=[common], help="all-terminal reliability at rho")
    p.add_argument("file")
    p.add_argument("--rho", required=True, help="edge failure probability, e.g. 1/1000 or 0.01")

    p = sub.add_parser("construct", parents=[common], help="emit an edge list")
    p.add_argument("family", choices=("gn", "hn", "wagner", "cube", "mobius"))
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)

    p = sub.add_parser("verify", parents=[common], help="run a verification job")
    p.add_argument("job", choices=VERIFY_JOBS)
    p.add_argument("--n", type=int, help="single n (min4, strategy)")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--file", action="append", default=[], help="graph file for the chain-formula job eq1 (repeatable)")
    p.add_argument("--p-max", type=int, default=8, help="largest Mobius parameter")

    p = sub.add_parser("scan", parents=[common], help="sign scan of the mu5 difference")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--no-oracle", action="store_true", help="skip the cross-check per row")
    return parser


def _subset_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    return EXPENSIVE_SUBSET_BUDGET if args.expensive else DEFAULT_SUBSET_BUDGET


def _spectrum_of(g, args, method="auto"):
    budget = _subset_budget(args)
    if (1 << g.m) > budget:
        raise BudgetExceeded(f"2^{g.m} edge subsets exceed budget {budget}")
    return cut_spectrum_bruteforce(g, jobs=args.jobs, method=method, max_edges=g.m)


def _range(args, lo, hi):
    n_min = lo if args.n_min is None else args.n_min
    n_max = hi if args.n_max is None else args.n_max
    if n_min > n_max:
        raise UsageError(f"empty range {n_min}..{n_max}")
    return n_min, n_max


def cmd_spectrum(args):
    g = read_edge_list(args.file)
    spec = _spectrum_of(g, args, args.method)
    data = {"n": g.n, "m": g.m, "mu": list(spec.mu)}
    rows = [{"k": k, "mu": mu} for k, mu in enumerate(spec.mu)]
    return CommandResult("spectrum", {"file": args.file, "method": args.method}, data, rows, ["k", "mu"])


def cmd_trees(args):
    g = read_edge_list(args.file)
    return CommandResult("trees", {"file": args.file}, {"n": g.n, "m": g.m, "spanning_trees": spanning_tree_count(g)})


def cmd_chains(args):
    d = chain_decomposition(read_edge_list(args.file))
    rows = [
        {"chain": i, "u": c.endpoints[0], "v": c.endpoints[1], "length": c.length,
         "edges": " ".join(str(e) for e in c.edge_ids)}
        for i, c in enumerate(d.chains)
    ]
    return CommandResult("chains", {"file": args.file}, d.to_report(), rows, ["chain", "u", "v", "length", "edges"])


def cmd_reliability(args):
    try:
        rho = Fraction(args.rho)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rho {args.rho!r}")
    g = read_edge_list(args.file)
    spec = _spectrum_of(g, args)
    value = reliability_eval(spec, rho)
    data = {"n": g.n, "m": g.m, "rho": str(rho), "reliability": str(value), "reliability_float": repr(float(value))}
    return CommandResult("reliability", {"file": args.file, "rho": args.rho}, data)


def cmd_construct(args):
    if args.family in ("gn", "hn"):
        if args.n is None:
            raise UsageError(f"construct {args.family} needs --n")
        g = umrg.construct_gn(args.n) if args.family == "gn" else umrg.construct_hn(args.n)
        params = {"family": args.family, "n": args.n}
    elif args.family == "mobius":
        if args.p is None:
            raise UsageError("construct mobius needs --p")
        g = mobius_graph(args.p)
        params = {"family": "mobius", "p": args.p}
    else:
        g = wagner_graph() if args.family == "wagner" else cube_graph()
        params = {"family": args.family}
    rows = [{"u": u, "v": v} for u, v in g.edges]
    return CommandResult("construct", params, {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}, rows, ["u", "v"]), g


def cmd_verify(args) -> VerificationReport:
    job = args.job
    if job == "count5":
        return checks.verify_count5()
    if job == "mu4":
        return checks.verify_mu4()
    if job == "census8":
        return checks.verify_census8()
    if job == "technical":
        return checks.verify_technical()
    if job == "mobius":
        return checks.verify_mobius(args.p_max, jobs=args.jobs)
    if job == "mincuts-c68":
        budget = 200_000 if args.budget is None else args.budget
        return checks.verify_mincuts_c68(budget, jobs=args.jobs)
    if job == "min4":
        if args.n is not None:
            return umrg.verify_prop_min4(args.n)
        return umrg.verify_prop_min4_window(*_range(args, 8, 120))
    if job == "strategy":
        if args.n is None:
            raise UsageError("verify strategy needs --n")
        return umrg.strategy_check(args.n)
    if job == "eq1":
        if args.file:
            corpus = [(path, read_edge_list(path)) for path in args.file]
        else:
            corpus = checks.chain_formula_corpus(args.seed)
        for name, g in corpus:
            if (1 << g.m) > _subset_budget(args):
                raise BudgetExceeded(f"{name}: 2^{g.m} edge subsets exceed budget {_subset_budget(args)}")
        return checks.verify_chain_formula(corpus, seed=args.seed, jobs=args.jobs)
    if job == "mu5-terms":
        n_min, n_max = _range(args, 13, 300)
        if n_min != 13:
            raise UsageError("mu5-terms starts at n=13")
        return checks.verify_mu5_terms(n_max, jobs=args.jobs)
    if job == "growth":
        return umrg.a5_growth(*_range(args, 1200, 5000))
    if job == "reliability-order":
        return checks.gn_hn_reliability_order(*_range(args, 13, 20), jobs=args.jobs)
    raise UsageError(f"unknown verify job {job!r}")


def cmd_scan(args) -> VerificationReport:
    if args.n_max < 167:
        raise UsageError("scan needs --n-max >= 167")
    return umrg.find_threshold(args.n_max, oracle=not args.no_oracle, jobs=args.jobs)


def _render(result, args) -> str:
    if args.format == "json":
        return result.to_json(args.timing)
    if args.format == "csv":
        text = result.to_csv()
        if isinstance(result, VerificationReport) and result.claim == "mu5-threshold":
            d = result.data
            text += (f"# threshold observed={d['observed_threshold']} claimed={d['claimed_threshold']}"
                     f" verdict={result.verdict}\n")
        return text
    text = result.to_text()
    if args.timing and result.runtime_ms is not None:
        text += f"  runtime_ms: {result.runtime_ms:.3f}\n"
    return text


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.jobs is None:
            args.jobs = _jobs_default()
        start = time.perf_counter()
        if args.command == "construct":
            result, g = cmd_construct(args)
            if args.format == "text":
                sys.stdout.write(format_edge_list(g))
                return EXIT_OK
        else:
            handler = {
                "spectrum": cmd_spectrum, "trees": cmd_trees, "chains": cmd_chains,
                "reliability": cmd_reliability, "verify": cmd_verify, "scan": cmd_scan,
            }[args.command]
            result = handler(args)
        if result.runtime_ms is None:
            result.runtime_ms = (time.perf_counter() - start) * 1000
        sys.stdout.write(_render(result, args))
        sys.stdout.flush()
        if isinstance(result, VerificationReport):
            if not result.confirmed:
                _fail(result.verdict, f"claim={result.claim}")
            return EXIT_CODES[result.verdict]
        return EXIT_OK
    except UsageError as exc:
        _fail("usage-error", exc)
        return EXIT_USAGE
    except MalformedGraphFile as exc:
        _fail("malformed-input", exc)
        return EXIT_USAGE
    except OSError as exc:
        _fail("unreadable-input", exc)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        _fail("out-of-budget", exc)
        return EXIT_BUDGET
    except RelgraphError as exc:
        _fail("invalid-input", exc)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
