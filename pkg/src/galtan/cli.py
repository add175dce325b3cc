"""Command-line interface.

Subcommands ingest JSON presentations, run the named computation and
emit a JSON report.  Exit codes: 0 the command ran (mathematical
findings, including negative ones, are report data), 2 malformed or
precondition-violating input, 3 an explicit search budget was exceeded.
Reports are byte-identical across runs for fixed inputs and seed.
"""

import argparse
import json
import sys

from galtan import fields, finalg, hopf
from galtan.errors import (
    GaltanError,
    NonRationalIdempotents,
    SearchBudgetExceeded,
    ValidationError,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliExit(EXIT_INPUT, f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise CliExit(
            EXIT_INPUT, f"malformed JSON in {path} at line {exc.lineno} col {exc.colno}"
        )


class CliExit(SystemExit):
    """SystemExit that first prints a JSON error line to stderr."""
    def __init__(self, code, message):
        print(json.dumps({"error": message}), file=sys.stderr)
        super().__init__(code)


def _emit(report, out=None):
    text = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_algcheck(args):
    data = _load_json(args.file)
    try:
        if "comult" in data:
            H = hopf.hopf_from_dict(data, validate=False)
            try:
                H.validate()
                report = {"valid": True, "kind": "hopf"}
            except ValidationError as exc:
                report = {"valid": False, "kind": "hopf", "axiom": exc.axiom}
            A = H.algebra
        else:
            A, report = finalg.algebra_check(data)
            report["kind"] = "algebra"
        if A is not None and report["valid"]:
            report["separable"] = finalg.is_separable(A)
            report["pi0_dim"] = finalg.pi0(A).dim
            report["nilradical_dim"] = finalg.nilradical(A).rows
        _emit(report, args.out)
        return EXIT_OK
    except (KeyError, TypeError, ValueError) as exc:
        raise CliExit(EXIT_INPUT, f"bad presentation: {exc}")


def cmd_roundtrip(args):
    from galtan import csep, groups, gset

    G = groups.group_from_dict(_load_json(args.group))
    F = fields.field_make(args.p, args.n)
    if not args.monoid and not args.gset:
        raise CliExit(EXIT_INPUT, "one of --gset or --monoid is required")
    try:
        if args.monoid:
            data = _load_json(args.monoid)
            M = _monoid_from_dict(data, F)
            iso = csep.roundtrip_monoid(M, seed=args.seed)
            report = {"roundtrip": "iso", "witness": iso.matrix.a.tolist()}
        else:
            X = gset.gset_from_dict(_load_json(args.gset), group=G)
            w = csep.roundtrip_gset(X, F, seed=args.seed)
            report = {"roundtrip": "iso", "witness": w.table}
        _emit(report, args.out)
        return EXIT_OK
    except NonRationalIdempotents as exc:
        _emit({"needs_extension": exc.degree}, args.out)
        return EXIT_OK
    except ValidationError as exc:
        raise CliExit(EXIT_INPUT, f"precondition failed: {exc}")
    except (KeyError, TypeError, ValueError) as exc:
        raise CliExit(EXIT_INPUT, f"bad presentation: {exc}")


def _monoid_from_dict(data, F):
    from galtan import groups
    from galtan.csep import FrobeniusMonoid
    from galtan.linalg import Mat
    from galtan.rep import Representation

    G = groups.group_from_dict(data["group"])
    mats = [Mat(F, m) for m in data["matrices"]]
    carrier = Representation(G, F, mats)
    return FrobeniusMonoid(
        carrier,
        Mat(F, data["mu"]),
        Mat(F, data["eta"]),
        Mat(F, data["delta"]),
        Mat(F, data["eps"]),
    )


def cmd_gamma(args):
    from galtan import csep, groups

    G = groups.group_from_dict(_load_json(args.group))
    if G.order > args.budget:
        raise CliExit(
            EXIT_BUDGET, f"group order {G.order} exceeds budget {args.budget}"
        )
    F = fields.field_make(args.p, args.n)
    try:
        r = csep.gamma_report(G, F, seed=args.seed)
    except SearchBudgetExceeded as exc:
        raise CliExit(EXIT_BUDGET, str(exc))
    _emit(
        {
            "matched": r["matched"],
            "order": r["order"],
            "aut_fiber_order": r["aut_fiber_order"],
            "points_order": r["points_order"],
        },
        args.out,
    )
    return EXIT_OK


def cmd_suite(args):
    from galtan.suite import run_suite

    report = run_suite(seed=args.seed, only=args.filter, include_timings=args.timings)
    _emit(report, args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galtan",
        description="exact finite-field algebra: separable algebras, Hopf "
        "algebras, G-sets, Stone duality and reconstruction checks",
    )
    parser.add_argument("--json", action="store_true", help="JSON output (default)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=6)
        p.add_argument("--out", default=None)
        p.add_argument("--p", type=int, default=7, help="base field characteristic")
        p.add_argument("--n", type=int, default=1, help="base field degree")

    p = sub.add_parser("algcheck", help="validate an algebra/Hopf JSON presentation")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_algcheck)

    p = sub.add_parser("roundtrip", help="linearize/spectrum round trips")
    p.add_argument("--group", required=True)
    p.add_argument("--gset")
    p.add_argument("--monoid")
    common(p)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("gamma", help="three-way group reconstruction report")
    p.add_argument("--group", required=True)
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("suite", help="run the acceptance criteria")
    p.add_argument("--filter", default=None, help="run only criteria matching this substring")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte determinism)")
    common(p)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliExit:
        raise
    except SearchBudgetExceeded as exc:
        raise CliExit(EXIT_BUDGET, str(exc))


if __name__ == "__main__":
    sys.exit(main())
