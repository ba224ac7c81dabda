"""Command-line entry point (``asmt``)."""

from __future__ import annotations

import argparse
import json
import sys

from . import checker, lmfdb, weyl
from .curve import GenusTwoModel
from .errors import AsmtError


def _print_json(obj):
    print(json.dumps(obj, indent=1))


def _cmd_check(args):
    rep = checker.check_mod3_criterion(GenusTwoModel.parse(args.curve), args.prime_bound)
    _emit_report(rep, args.format)


def _cmd_mod2(args):
    rep = checker.check_mod2_conditions(GenusTwoModel.parse(args.curve), args.prime_budget)
    _emit_report(rep, args.format)


def _emit_report(rep, fmt):
    if fmt == "json":
        print(rep.to_json(indent=1))
        return
    print(f"curve: {rep.curve}")
    for c in rep.conditions:
        print(f"  {c.name}: {c.verdict.value}")
    print(f"overall: {rep.overall.value}")


def _cmd_density(args):
    res = checker.local_density(args.jobs)
    print(res.fraction)
    print(json.dumps(res.as_dict()))


def _cmd_weyl_kappa(args):
    lam = weyl.Character.parse(args.lam, default_w="neg")
    rows = [
        (f"^{i}w", str(w), weyl.kappa_w(lam, w)) for i, w in enumerate(weyl.kostant_representatives())
    ]
    if args.format == "json":
        _print_json(
            {
                "lambda": str(lam),
                "kappa": [{"rep": r, "word": wd, "kappa": str(k)} for r, wd, k in rows],
                "w_lambda": [str(w) for w in weyl.w_lambda(lam)],
                "schema": checker.SCHEMA,
            }
        )
        return
    for r, _, k in rows:
        print(f"{r} {k}")


def _cmd_weyl_slopes(args):
    nu = weyl.Character.parse(args.nu, default_w="neg")
    w = weyl.WeylElement.parse(args.w)
    bound = weyl.slope_bound(nu, w)
    if args.format == "json":
        _print_json({"nu": str(nu), "w": str(w), "slope_bound": str(bound), "schema": checker.SCHEMA})
    else:
        print(bound)


def _cmd_chambers(args):
    lam = weyl.Character.parse(args.lam, default_w="neg")
    records = weyl.chamber_data(lam)
    if args.format == "json":
        print(weyl.chamber_json(records))
    else:
        sys.stdout.write(weyl.chamber_csv(records))


def _cmd_lmfdb_ingest(args):
    if args.fetch:
        n = lmfdb.fetch(args.input, limit=args.limit)
        print(json.dumps({"downloaded": n}), file=sys.stderr)
    result = lmfdb.ingest(args.input)
    cache = lmfdb.ResultCache(args.cache or lmfdb.default_cache_path())
    lmfdb.run_batch(result.records, cache, args.prime_bound, args.jobs)
    _print_json(
        {
            "records": len(result.records),
            "errors": result.errors,
            "snapshot": lmfdb.snapshot_hash(result.records),
            "cache": str(cache.path),
            "schema": checker.SCHEMA,
        }
    )


def _cmd_lmfdb_report(args):
    cache = lmfdb.ResultCache(args.cache or lmfdb.default_cache_path())
    _print_json(lmfdb.report_from_cache(cache))


def _cmd_compare(args):
    res = checker.compare_mod3_frobenius(GenusTwoModel.parse(args.a), GenusTwoModel.parse(args.b), args.bound)
    if args.format == "json":
        _print_json(res)
    elif res["agree"]:
        print(f"agree up to {res['bound']} ({len(res['compared_primes'])} primes)")
    else:
        print(f"disagree at {res['first_disagreement']}: {res['disagreement']['a']} vs {res['disagreement']['b']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asmt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="json", choices=("json", "text")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("check", help="check the mod-3 criterion hypotheses for one curve")
    p.add_argument("--curve", required=True, help="model text, e.g. 'f=[1,-1,0,0,0,1];h=[0]'")
    p.add_argument("--prime-bound", type=int, default=200)
    fmt(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("mod2", help="check the mod-2 image conditions for one curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--prime-budget", type=int, default=50)
    fmt(p)
    p.set_defaults(func=_cmd_mod2)

    p = sub.add_parser("density", help="exact density of the local conditions at 2 and 3")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("weyl", help="weight combinatorics")
    wsub = p.add_subparsers(dest="weyl_command", required=True)
    q = wsub.add_parser("kappa", help="kappa_w for the four Kostant representatives")
    q.add_argument("--lambda", dest="lam", required=True, help="k1,k2[,w]")
    fmt(q, default="text")
    q.set_defaults(func=_cmd_weyl_kappa)
    q = wsub.add_parser("slopes", help="slope bound -nu + w^-1 w0M rho + rho")
    q.add_argument("--nu", required=True, help="k1,k2[,w]")
    q.add_argument("--w", required=True, help="word such as 'bab' or 's_b s_a'")
    fmt(q, default="text")
    q.set_defaults(func=_cmd_weyl_slopes)

    p = sub.add_parser("chambers", help="chamber picture data")
    p.add_argument("--lambda", dest="lam", required=True, help="k1,k2[,w]; w defaults to -(k1+k2)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("lmfdb", help="database export ingestion and reports")
    lsub = p.add_subparsers(dest="lmfdb_command", required=True)
    q = lsub.add_parser("ingest", help="ingest a JSON-lines export and check every curve")
    q.add_argument("--input", required=True)
    q.add_argument("--cache", default=None, help=f"defaults to ${lmfdb.CACHE_ENV}")
    q.add_argument("--prime-bound", type=int, default=lmfdb.DEFAULT_PRIME_BOUND)
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--fetch", action="store_true", help="download the export first (network)")
    q.add_argument("--limit", type=int, default=None)
    q.set_defaults(func=_cmd_lmfdb_ingest)
    q = lsub.add_parser("report", help="aggregate counts from a cache")
    q.add_argument("--cache", default=None)
    q.set_defaults(func=_cmd_lmfdb_report)

    p = sub.add_parser("compare", help="compare Frobenius charpolys mod 3 of two curves")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--bound", type=int, default=100)
    fmt(p)
    p.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except AsmtError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
