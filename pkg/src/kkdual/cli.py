"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (or a failing law in
``check``), 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import builders, laws
from .expr import ParseError, format_graded, format_group, parse_graded
from .fgab import FgAbGroup, InvalidHomomorphism
from .intlin import IntMatrix, snf
from .kkobj import Construction, Parity, dual, kk_group, kunneth, modp_k, suspend
from .limits import DirectSystem, MalformedSystem, colimit_is_fg, dual_verdict
from .ringmodel import EndoRingElement, NotInvertible, try_invert

DEFAULT_SEED = 42


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _read_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON: {e}") from e


def read_matrix(text: str) -> IntMatrix:
    """A JSON list of rows, or whitespace-separated rows of integers."""
    text = text.strip()
    try:
        if text.startswith("["):
            return IntMatrix.from_rows(json.loads(text))
        rows = [[int(x) for x in ln.split()] for ln in text.splitlines() if ln.strip()]
        return IntMatrix.from_rows(rows)
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad matrix: {e}") from e


class _Out:
    def __init__(self, args):
        self.json = args.json
        self.primary = getattr(args, "primary", False)

    def group(self, g: FgAbGroup) -> str:
        return json.dumps(g.to_record()) if self.json else format_group(g, self.primary)

    def graded(self, a) -> str:
        return json.dumps(a.to_record()) if self.json else format_graded(a, self.primary)


def cmd_dual(args, out):
    return out.graded(dual(parse_graded(args.object), Parity.ODD if args.odd else Parity.EVEN))


def cmd_suspend(args, out):
    return out.graded(suspend(parse_graded(args.object)))


def cmd_tensor(args, out):
    return out.graded(kunneth(parse_graded(args.a), parse_graded(args.b)))


def cmd_kk(args, out):
    return out.group(kk_group(parse_graded(args.a), parse_graded(args.b), args.degree))


def cmd_modp(args, out):
    if args.n < 2:
        raise DomainError(f"--n must be >= 2, got {args.n}")
    c = Construction(args.construction)
    return out.group(modp_k(parse_graded(args.object), args.n, c, args.degree))


def cmd_invert(args, out):
    try:
        u = EndoRingElement.from_record(_read_json(args.file))
    except (KeyError, TypeError) as e:
        raise UsageError(f"bad ring element record: {e}") from e
    inv = try_invert(u)
    if isinstance(inv, NotInvertible):
        if out.json:
            return json.dumps(inv.to_record())
        return (f"not invertible: degree {inv.degree} endomorphism has "
                f"cokernel {format_group(inv.cokernel)}, kernel {format_group(inv.kernel)}")
    if out.json:
        return json.dumps({"invertible": True, "inverse": inv.to_record()})
    return "invertible\n" + json.dumps(inv.to_record())


def _system(path):
    return DirectSystem.from_record(_read_json(path))


def cmd_colimit(args, out):
    fg, g = colimit_is_fg(_system(args.file))
    if out.json:
        return json.dumps({"finitely_generated": fg, "colimit": g.to_record() if fg else None})
    return out.group(g) if fg else "Unbounded (colimit is not finitely generated)"


def cmd_dual_exists(args, out):
    v = dual_verdict(_system(args.k0), _system(args.k1), Parity.ODD if args.odd else Parity.EVEN)
    if out.json:
        return json.dumps(v.to_record())
    if v.exists:
        return f"exists: {format_graded(v.dual, out.primary)}"
    return f"no dual: {v.reason}"


def cmd_ck(args, out):
    a = builders.read_01_matrix(_read(args.file))
    k = builders.cuntz_krieger(a)
    if out.json:
        rec = {"K": k.to_record()}
        if args.check_duality:
            rec["duality_check"] = builders.ck_duality_check(a)
        return json.dumps(rec)
    text = out.graded(k)
    if args.check_duality:
        text += f"\nduality: {str(builders.ck_duality_check(a)).lower()}"
    return text


def cmd_snf(args, out):
    res = snf(read_matrix(_read(args.file)))
    rec = {"U": res.U.to_rows(), "S": res.S.to_rows(), "V": res.V.to_rows(), "diag": list(res.diag)}
    if out.json:
        return json.dumps(rec)
    return "\n".join(f"{k}: {v}" for k, v in [("diag", rec["diag"]), ("U", rec["U"]),
                                               ("S", rec["S"]), ("V", rec["V"])])


def cmd_check(args, out):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("KKDUAL_SEED", DEFAULT_SEED))
    names = args.law or None
    for n in names or ():
        if n not in laws.LAWS:
            raise UsageError(f"unknown law {n!r}; choose from {', '.join(laws.LAWS)}")
    bounds = laws.Bounds(args.max_rank, args.max_factors, args.max_order)
    results = laws.run_suite(seed, args.cases, names, jobs=args.jobs, bounds=bounds)
    passed = all(r.passed for r in results)
    if out.json:
        text = json.dumps({
            "seed": seed, "cases": args.cases, "passed": passed,
            "results": [{"law": r.name, "cases": r.cases, "failures": r.failures,
                         "first_failure": r.first_failure} for r in results]})
    else:
        lines = [f"seed={seed} cases={args.cases}"] + [r.line() for r in results]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} laws passed")
        text = "\n".join(lines)
    return text, (0 if passed else 1)


def build_parser() -> argparse.ArgumentParser:
    def output_flags(parser, default):
        parser.add_argument("--json", action="store_true", default=default, help="print JSON records")
        parser.add_argument("--primary", action="store_true", default=default,
                            help="print torsion as prime-power factors")

    p = argparse.ArgumentParser(prog="kkdual",
                                description="Spanier-Whitehead K-duality on graded K-theory.")
    output_flags(p, False)
    # flags may also follow the subcommand; SUPPRESS keeps them from resetting the top-level value
    common = argparse.ArgumentParser(add_help=False)
    output_flags(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("dual", cmd_dual, "K-theory of the K-dual")
    sp.add_argument("object", help='graded group, e.g. "[Z/3 ; 0]"')
    sp.add_argument("--odd", action="store_true", help="odd duality (extra degree shift)")

    sp = add("suspend", cmd_suspend, "swap degrees")
    sp.add_argument("object")

    sp = add("tensor", cmd_tensor, "Kunneth formula for A ⊗ B")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("kk", cmd_kk, "KK_i(A, B) from the UCT")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--degree", type=int, choices=(0, 1), required=True)

    sp = add("modp", cmd_modp, "mod-n K-theory")
    sp.add_argument("object")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--construction", choices=[c.value for c in Construction], default="tensor")
    sp.add_argument("--degree", type=int, choices=(0, 1), required=True)

    sp = add("invert", cmd_invert, "invert an element of the KK0(A,A) ring model (JSON file)")
    sp.add_argument("file", help="JSON record, or - for stdin")

    sp = add("colimit", cmd_colimit, "colimit of a direct system (JSON file)")
    sp.add_argument("file")

    sp = add("dual-exists", cmd_dual_exists, "decide whether a K-dual exists")
    sp.add_argument("k0", help="direct system for K0 (JSON file)")
    sp.add_argument("k1", help="direct system for K1 (JSON file)")
    sp.add_argument("--odd", action="store_true")

    sp = add("ck", cmd_ck, "K-theory of a Cuntz-Krieger algebra from a 0/1 matrix file")
    sp.add_argument("file")
    sp.add_argument("--check-duality", action="store_true")

    sp = add("snf", cmd_snf, "Smith normal form of an integer matrix file")
    sp.add_argument("file")

    sp = add("check", cmd_check, "run the randomized law suite")
    sp.add_argument("--seed", type=int, default=None,
                    help=f"default: $KKDUAL_SEED or {DEFAULT_SEED}")
    sp.add_argument("--cases", type=int, default=200)
    sp.add_argument("--max-rank", type=int, default=laws.DEFAULT_BOUNDS.max_rank)
    sp.add_argument("--max-factors", type=int, default=laws.DEFAULT_BOUNDS.max_factors)
    sp.add_argument("--max-order", type=int, default=laws.DEFAULT_BOUNDS.max_order)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--law", action="append", help="run only this law (repeatable)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args)
    try:
        result = args.fn(args, out)
    except (ParseError, UsageError) as e:
        print(f"kkdual: error: {e}", file=sys.stderr)
        return 2
    except (DomainError, InvalidHomomorphism, MalformedSystem, builders.InvalidMatrix, ValueError) as e:
        print(f"kkdual: {e}", file=sys.stderr)
        return 1
    status = 0
    if isinstance(result, tuple):
        result, status = result
    print(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
