"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad usage or invalid
parameters, 3 internal assertion failure.  All numeric output is exact;
rationals are rendered as "p/q" strings in JSON and text alike.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import suites
from .affineperm import (
    coset_factorization,
    coset_factorization_transpose,
    from_finite,
    is_m_stable,
    min_coset_rep,
    omega_from_basis,
    reassemble,
    stable_label_condition,
    translation,
)
from .hilb import (
    enum_fhilb,
    enum_hilb,
    enum_phillb,
    gieseker_graded_dim,
    jordan_composition,
    line_bundle_weights,
)
from .modules import module_relations_ok, standard_module

SCHEMA = "v1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def fmt(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 \
            else str(value.numerator)
    return str(value)


def _emit_suite(result: suites.SuiteResult, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"schema": SCHEMA, "suite": result.name,
                          "ok": result.ok, "lines": result.lines},
                         sort_keys=True))
    else:
        print(f"suite {result.name}: {'PASS' if result.ok else 'FAIL'}")
        for line in result.lines:
            print(line)
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def _emit_rows(command: str, params: dict, header: list[str],
               rows: list[dict], fmt_name: str) -> None:
    if fmt_name == "json":
        payload = {"schema": SCHEMA, "command": command,
                   "params": {k: fmt(v) for k, v in params.items()},
                   "rows": rows}
        print(json.dumps(payload, sort_keys=True))
    elif fmt_name == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(
                " ".join(str(x) for x in row[h]) if isinstance(row[h], list)
                else str(row[h]) for h in header))
    else:
        for row in rows:
            print("  ".join(f"{h}={row[h]}" for h in header))


# ---------------------------------------------------------------------------
# subcommands

def cmd_verify_relations(args) -> int:
    result = suites.relation_suite([(args.n, args.t, args.c)], args.max_degree)
    return _emit_suite(result, args.json)


def cmd_oracle_check(args) -> int:
    return _emit_suite(suites.oracle_act_suite(args.m, args.n, args.max_degree),
                       args.json)


def cmd_simple_dim(args) -> int:
    pairs = [(args.m, args.n)] if args.m and args.n else None
    return _emit_suite(suites.simple_dim_suite(pairs), args.json)


def cmd_figures(args) -> int:
    return _emit_suite(suites.figures_suite(), args.json)


def cmd_philb_check(args) -> int:
    return _emit_suite(suites.philb_bijection_suite(args.m, args.n, args.max_k),
                       args.json)


def cmd_bgg(args) -> int:
    from .modules import bgg_exactness_report

    report = bgg_exactness_report(args.m, args.n, args.max_degree)
    rows = []
    for row in report.rows:
        entry = {"degree": row.degree, "dims": list(row.dims),
                 "homology": list(row.homology), "end_dim": row.simple_dim,
                 "exact": row.exact}
        if args.emit_ranks:
            entry["ranks"] = list(row.ranks[1:])
        rows.append(entry)
    header = ["degree", "dims"] + (["ranks"] if args.emit_ranks else []) + \
        ["homology", "end_dim", "exact"]
    _emit_rows("bgg", {"m": args.m, "n": args.n}, header, rows,
               "json" if args.json else "text")
    ok = report.ok
    print(f"composites vanish: {report.composites_vanish}; "
          f"exact away from the end: {ok}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_mackey(args) -> int:
    return _emit_suite(suites.mackey_suite(args.max_degree), args.json)


def cmd_gieseker(args) -> int:
    rows = []
    ok = True
    for k in range(args.max_k + 1):
        fixed, invariant = gieseker_graded_dim(args.m, args.n, args.r, k)
        ok &= fixed == invariant
        rows.append({"k": k, "fixed_point_dim": fixed, "invariant_dim": invariant})
    _emit_rows("gieseker", {"m": args.m, "n": args.n, "r": args.r},
               ["k", "fixed_point_dim", "invariant_dim"], rows,
               "json" if args.json else "text")
    print(f"gieseker identity: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_t0(args) -> int:
    return _emit_suite(suites.t0_suite(args.max_n, args.max_degree, args.max_k),
                       args.json)


def cmd_hilb_enum(args) -> int:
    fmt_name = "json" if args.json else ("csv" if args.csv else "text")
    params = {"m": args.m, "n": args.n, "k": args.k}
    if args.compositional:
        if args.r is None:
            print("--compositional requires --r", file=sys.stderr)
            return EXIT_USAGE
        rows = [{"base": list(p.base), "labels": list(p.labels),
                 "gamma": list(p.gamma)}
                for p in enum_fhilb(args.m, args.n, args.r, args.k)]
        params["r"] = args.r
        _emit_rows("hilb-enum-compositional", params,
                   ["base", "labels", "gamma"], rows, fmt_name)
    elif args.parabolic:
        rows = [{"c": list(p.c), "alpha": list(p.alpha),
                 "label": list(p.label),
                 "weights": list(line_bundle_weights(p, args.m, args.n))}
                for p in enum_phillb(args.m, args.n, args.k)]
        _emit_rows("hilb-enum-parabolic", params,
                   ["c", "alpha", "label", "weights"], rows, fmt_name)
    else:
        rows = [{"c": list(c), "jordan": list(jordan_composition(c, args.m))}
                for c in enum_hilb(args.m, args.n, args.k)]
        _emit_rows("hilb-enum", params, ["c", "jordan"], rows, fmt_name)
    return EXIT_OK


def cmd_sweep(args) -> int:
    """Seeded randomized cross-checks of the affine combinatorics."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        n = rng.randrange(2, 6)
        k = rng.randrange(0, 7)
        a = [0] * n
        for _ in range(k):
            a[rng.randrange(n)] += 1
        a = tuple(a)
        w = min_coset_rep(a)
        nu = coset_factorization(w)
        if reassemble(n, nu).window != w.window:
            failures += 1
        nuT = coset_factorization_transpose(w)
        expected = tuple(sum(1 for p in nu if p >= i) for i in range(1, n))
        while expected and expected[-1] == 0:
            expected = expected[:-1]
        if nuT != expected:
            failures += 1
        m = rng.randrange(1, 6)
        from math import gcd
        if gcd(m, n) == 1:
            omega = omega_from_basis(a, m)
            naive = all(omega(x + m) > omega(x) for x in range(-2 * n, 2 * n + 1))
            if is_m_stable(omega, m) != naive or naive != stable_label_condition(a, m):
                failures += 1
    print(f"sweep seed={args.seed} trials={args.trials} failures={failures}")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def cmd_acceptance(args) -> int:
    """Run every verification suite at the full acceptance sizes."""
    results = [suites.relation_suite()]
    for m, n in suites.ORACLE_ACT_PAIRS:
        results.append(suites.oracle_act_suite(m, n))
    results.append(suites.simple_dim_suite())
    results.append(suites.figures_suite())
    for m, n in suites.PHILB_PAIRS:
        results.append(suites.philb_bijection_suite(m, n))
    for m, n in suites.BGG_PAIRS:
        results.append(suites.bgg_suite(m, n))
    results.append(suites.mackey_suite())
    for m, n, r in suites.GIESEKER_TRIPLES:
        results.append(suites.gieseker_suite(m, n, r))
    results.append(suites.t0_suite())
    ok = True
    for res in results:
        print(f"suite {res.name}: {'PASS' if res.ok else 'FAIL'}")
        if args.verbose or not res.ok:
            for line in res.lines:
                print(line)
        ok &= res.ok
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cherednik",
        description="Exact checks of Cherednik-algebra weight combinatorics "
                    "and curve-singularity Hilbert scheme enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("verify-relations", help="operator identities on monomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=rational, required=True)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--max-degree", type=int, default=5)
    add_json(p)
    p.set_defaults(func=cmd_verify_relations)

    p = sub.add_parser("oracle-check", help="eigenbasis vs combinatorial action")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=6)
    add_json(p)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("simple-dim", help="simple-module slice dimension")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    add_json(p)
    p.set_defaults(func=cmd_simple_dim)

    p = sub.add_parser("figures", help="reproduce the worked examples bit-exactly")
    add_json(p)
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("philb-check", help="flag points vs simple labels")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-k", type=int, default=10)
    add_json(p)
    p.set_defaults(func=cmd_philb_check)

    p = sub.add_parser("bgg", help="hook resolution homology table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--emit-ranks", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("mackey", help="generalized weight structure at n=2, c=2")
    p.add_argument("--max-degree", type=int, default=10)
    add_json(p)
    p.set_defaults(func=cmd_mackey)

    p = sub.add_parser("gieseker", help="fixed-point vs invariant dimensions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-k", type=int, default=6)
    add_json(p)
    p.set_defaults(func=cmd_gieseker)

    p = sub.add_parser("t0-suite", help="t=0 module relations and curve counts")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--max-k", type=int, default=8)
    add_json(p)
    p.set_defaults(func=cmd_t0)

    p = sub.add_parser("hilb", help="Hilbert scheme enumeration")
    hsub = p.add_subparsers(dest="hilb_command", required=True)
    pe = hsub.add_parser("enum", help="list torus fixed points")
    pe.add_argument("--m", type=int, required=True)
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--k", type=int, required=True)
    group = pe.add_mutually_exclusive_group()
    group.add_argument("--parabolic", action="store_true")
    group.add_argument("--compositional", action="store_true")
    pe.add_argument("--r", type=int)
    fmt_group = pe.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true")
    fmt_group.add_argument("--csv", action="store_true")
    pe.set_defaults(func=cmd_hilb_enum)

    p = sub.add_parser("sweep", help="seeded randomized cross-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("acceptance", help="run every suite at acceptance sizes")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_acceptance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
