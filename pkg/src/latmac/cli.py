"""Command-line interface.

Subcommands:

* ``repr``: degree-one form, kappa and ``C_f(a, z)`` for an ideal;
* ``forward``: the ideal class attached to a matrix read from JSON;
* ``classes``: class table of a bounded corpus with the Lenstra check;
* ``selfcheck``: seeded property suites.

Exit codes: 0 success, 1 parse or usage error, 2 domain precondition
failure, 3 property failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import presets
from .classgroup import classify, enumerate_products, table_to_json, verify_lenstra
from .ideal import degree_one_form, ideal_from_generators, unit_ideal
from .linalg import matrix_from_json
from .lm import matrix_to_ideal, representative_for_ideal
from .order import OrderCtx
from .poly import detect_variable, parse_poly
from .ring import ring_from_string
from .selfcheck import RINGS, run_selfcheck

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_PROPERTY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help='base ring: "Z" or "GF(p)[t]"')
    common.add_argument("--f", help='monic polynomial, e.g. "x^3+4*x-1"')
    common.add_argument("--example", type=int, choices=sorted(presets.EXAMPLES), help="use a built-in example")
    common.add_argument("--assert-irreducible", action="store_true", help="trust that f is irreducible (degree >= 4)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="compact JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="indented JSON output")

    parser = _Parser(prog="latmac", description="Matrix similarity classes and ideal classes of A[x]/(f).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("repr", parents=[common], help="C_f(a, z) representative of a degree-one ideal")
    p.add_argument("--ideal", help='comma-separated generators, e.g. "3, x-2"')

    p = sub.add_parser("forward", parents=[common], help="ideal attached to a matrix")
    p.add_argument("--matrix", required=True, help='JSON file {"ring": ..., "entries": [[...]]}')

    p = sub.add_parser("classes", parents=[common], help="class table of a bounded corpus")
    p.add_argument("--prime-bound", type=int, help="bound on base primes (absolute value, or degree)")
    p.add_argument("--exp-bound", type=int, help="largest exponent of a prime factor")
    p.add_argument("--box", type=int, help="coordinate bound of the equivalence search")
    p.add_argument("--max-factors", type=int, help="largest number of prime factors per product")

    p = sub.add_parser("selfcheck", parents=[common], help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100, help="cases per suite and ring")
    return parser


def _preset(args):
    return presets.get(args.example) if args.example else None


def _context(args):
    preset = _preset(args)
    ring_s = args.ring or (preset.ring if preset else "Z")
    f_s = args.f or (preset.f if preset else None)
    if f_s is None:
        raise UsageError("--f is required (or use --example)")
    try:
        ring = ring_from_string(ring_s)
        f = parse_poly(f_s, ring)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        return OrderCtx(ring, f, var=detect_variable(f_s, ring), assert_irreducible=args.assert_irreducible)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _parse_ideal(ctx, text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("no ideal generators given")
    try:
        gens = [ctx.parse_elem(p) for p in parts]
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        return ideal_from_generators(ctx, gens)
    except (ValueError, ArithmeticError) as exc:
        raise DomainError(str(exc)) from exc


def _representative(b):
    try:
        return representative_for_ideal(b).to_json()
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def cmd_repr(args):
    ctx = _context(args)
    if args.ideal:
        return _representative(_parse_ideal(ctx, args.ideal))
    preset = _preset(args)
    if preset is None:
        raise UsageError("--ideal is required (or use --example)")
    return {"results": [dict(ideal=g, **_representative(_parse_ideal(ctx, g))) for g in preset.ideals]}


def _hnf_json(b):
    ring = b.ctx.ring
    return [[ring.format(x) for x in row] for row in b.H]


def cmd_forward(args):
    ctx = _context(args)
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            obj = json.load(fh)
        _, M = matrix_from_json(obj, ctx.ring)
    except (OSError, ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"cannot read matrix: {exc}") from exc
    try:
        b = matrix_to_ideal(ctx, M)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    out = {"ideal": _hnf_json(b), "unit_ideal": b == unit_ideal(ctx), "degree_one_form": None, "representative": None}
    form = None if b.is_unit() else degree_one_form(b)
    if b.is_unit() or form is not None:
        rep = representative_for_ideal(b)
        out["degree_one_form"] = rep.form.to_json(ctx.ring)
        out["representative"] = rep.to_json()
    return out


def cmd_classes(args):
    ctx = _context(args)
    preset = _preset(args)

    def pick(value, name):
        if value is not None:
            return value
        if preset is not None:
            return getattr(preset, name)
        raise UsageError(f"--{name.replace('_', '-')} is required (or use --example)")

    prime_bound = pick(args.prime_bound, "prime_bound")
    exp_bound = pick(args.exp_bound, "exp_bound")
    box = pick(args.box, "box")
    max_factors = args.max_factors if args.max_factors is not None else (preset.max_factors if preset else 2)
    if prime_bound < 1 or exp_bound < 1 or box < 0:
        raise UsageError("bounds must be positive")
    try:
        items = enumerate_products(ctx, prime_bound, exp_bound, max_factors)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    table = classify([b for b, _ in items], box, dict(items))
    out = table_to_json(table, verify_lenstra(table))
    out["corpus_size"] = len(items)
    out["parameters"] = {"prime_bound": prime_bound, "exp_bound": exp_bound, "box": box, "max_factors": max_factors}
    return out


def cmd_selfcheck(args):
    rings = (args.ring,) if args.ring else RINGS
    try:
        for r in rings:
            ring_from_string(r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = run_selfcheck(seed=args.seed, cases=args.cases, rings=rings)
    suites = [{"suite": r.name, "ring": r.ring, "passed": r.passed, "total": r.total} for r in results]
    failed = next((r for r in results if not r.ok), None)
    out = {"seed": args.seed, "suites": suites, "ok": failed is None}
    if failed is not None:
        out["counterexample"] = dict(suite=failed.name, **failed.counterexample)
    return out


COMMANDS = {"repr": cmd_repr, "forward": cmd_forward, "classes": cmd_classes, "selfcheck": cmd_selfcheck}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    indent = 2 if args.pretty else None
    print(json.dumps(out, indent=indent, ensure_ascii=False))
    if args.command == "selfcheck" and not out["ok"]:
        return EXIT_PROPERTY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
