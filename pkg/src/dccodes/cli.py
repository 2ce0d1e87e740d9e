"""Command-line front end.

Exit codes: 0 success, 1 invalid arguments, 2 precondition violated,
3 verification failure.  Data goes to stdout (or ``--out``), diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import census
from .codes import DoubleCirculantCode, is_self_dual, make_code, weight_distribution
from .finite_field import parse_field
from .polyring import artin_condition, factor_xn_minus_1, format_coeffs, parse_poly
from .symmetry import verify_constadihedral, verify_dihedral

EXIT_OK, EXIT_ARGS, EXIT_PRE, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field(args):
    if args.q is None:
        raise UsageError("--q is required")
    try:
        return parse_field(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _n(args):
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def _code(args) -> DoubleCirculantCode:
    if args.code:
        try:
            d = json.loads(args.code)
            field = parse_field(d["q"])
            n, a = int(d["n"]), parse_poly(field, str(d["a"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad --code: {exc}") from None
    else:
        field, n = _field(args), _n(args)
        if args.a is None:
            raise UsageError("--a is required")
        try:
            a = parse_poly(field, args.a)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return make_code(field, n, a)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None


def _require_square(field):
    if not census.minus_one_is_square(field):
        raise PreconditionError(f"-1 is not a square in GF({field.q})")


# -- commands ------------------------------------------------------------------


def cmd_factor(args):
    field, n = _field(args), _n(args)
    fac = factor_xn_minus_1(n, field)
    return {
        "q": str(field),
        "n": n,
        "alpha": fac.alpha,
        "self_reciprocal": [{"g": format_coeffs(g.coeffs), "d": d} for g, d in fac.self_reciprocal],
        "pairs": [
            {"h": format_coeffs(h.coeffs), "h_star": format_coeffs(hs.coeffs), "e": e}
            for h, hs, e in fac.pairs
        ],
        "s": fac.s,
        "t": fac.t,
        "factor_count": fac.factor_count,
        "degree_sum": sum(f.degree for f in fac.factors()),
    }, EXIT_OK


def cmd_count(args):
    field, n = _field(args), _n(args)
    _require_square(field)
    rep = census.count_formula(n, field)
    return rep.to_dict(), EXIT_OK


def cmd_enumerate(args):
    field, n = _field(args), _n(args)
    _require_square(field)
    if args.method == "brute":
        polys = census.brute_force_enumerate(n, field)
    else:
        polys = census.crt_enumerate(n, field)
    codes = [make_code(field, n, a).to_dict() for a in polys]
    return {"q": str(field), "n": n, "count": len(codes), "codes": codes}, EXIT_OK


def cmd_verify(args):
    code = _code(args)
    out = {"code": code.to_dict(), "self_dual": is_self_dual(code)}
    if not out["self_dual"]:
        out["passed"] = False
        return out, EXIT_FAIL
    if code.n % 2 == 0 or code.n < 3:
        raise PreconditionError("symmetry verification needs odd n >= 3")
    rep = verify_dihedral(code) if code.field.p == 2 else verify_constadihedral(code)
    out.update(rep)
    return out, EXIT_OK if rep["passed"] else EXIT_FAIL


def cmd_distance(args):
    code = _code(args)
    wd = weight_distribution(code, budget=args.budget, workers=args.workers)
    d = min(w for w in wd if w > 0)
    return {
        "code": code.to_dict(),
        "d": d,
        "delta": d / code.length,
        "weight_distribution": {str(w): c for w, c in wd.items()},
    }, EXIT_OK


def cmd_lemma7(args):
    field, n = _field(args), _n(args)
    flags = artin_condition(field.q, n)
    if not flags["two_factor"]:
        raise PreconditionError(f"x^{n} - 1 is not a product of two irreducibles over GF({field.q})")
    rep = census.lemma7_audit(n, field)
    return rep, EXIT_OK if rep["passed"] else EXIT_FAIL


def cmd_bound(args):
    if args.q is None:
        raise UsageError("--q is required")
    q = _field(args).q
    y = args.y
    x = census.inv_entropy_q(q, y)
    return {"q": q, "y": y, "delta": x, "entropy_at_delta": census.entropy_q(q, x)}, EXIT_OK


def cmd_census(args):
    field = _field(args)
    if args.n_list:
        try:
            ns = [int(t) for t in args.n_list.split(",")]
        except ValueError:
            raise UsageError(f"bad --n-list {args.n_list!r}") from None
    elif args.n is not None:
        ns = [args.n]
    else:
        if args.n_min is None or args.n_max is None:
            raise UsageError("census needs --n-list, --n, or --n-min/--n-max")
        ns = range(args.n_min, args.n_max + 1, args.n_step)
    rows = census.census_run(
        field,
        ns,
        sample_size=args.sample_size,
        seed=args.seed,
        budget=args.budget,
        timing=args.timing,
        workers=args.workers,
    )
    return rows, EXIT_OK


COMMANDS = {
    "factor": cmd_factor,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "distance": cmd_distance,
    "lemma7-audit": cmd_lemma7,
    "bound": cmd_bound,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dccodes", description="Self-dual double circulant codes over GF(q).")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--q", help='field order as "p^m" or an integer prime power')
        p.add_argument("--n", type=int)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        if name in ("verify", "distance"):
            p.add_argument("--a", help='first row of A, reps ascending in degree, e.g. "0,1"')
            p.add_argument("--code", help="a code object as emitted by enumerate")
        if name == "enumerate":
            p.add_argument("--method", choices=["crt", "brute"], default="crt")
        if name == "bound":
            p.add_argument("--y", type=float, default=0.25)
        if name in ("distance", "census"):
            p.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
            p.add_argument("--workers", type=int, default=1)
        if name == "census":
            p.add_argument("--n-min", type=int)
            p.add_argument("--n-max", type=int)
            p.add_argument("--n-step", type=int, default=1)
            p.add_argument("--n-list", help="comma-separated n values")
            p.add_argument("--sample-size", type=int, default=census.DEFAULT_SAMPLE)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--timing", action="store_true", help="fill the ms column")
    return parser


def _flat_csv(data) -> str:
    rows = data if isinstance(data, list) else [data]
    keys = list(rows[0].keys()) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(keys)
    for r in rows:
        writer.writerow(
            [json.dumps(r[k], sort_keys=True) if isinstance(r[k], (dict, list)) else r[k] for k in keys]
        )
    return buf.getvalue()


def render(command: str, data, fmt: str) -> str:
    if command == "census":
        return census.rows_to_csv(data) if fmt == "csv" else census.rows_to_json(data) + "\n"
    if fmt == "csv":
        if command == "enumerate":
            return _flat_csv(data["codes"])
        return _flat_csv(data)
    return json.dumps(data, indent=2) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: " + " | ".join(COMMANDS))
        data, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (PreconditionError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRE
    text = render(args.command, data, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_FAIL:
        print("verification failed", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
