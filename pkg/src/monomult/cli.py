"""Command-line front end: ``monomult <command> [options] IDEAL``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 computation limit.
"""

import argparse
import json
import math
import os
import sys

from . import closure, multiplier, oracle, polyhedron
from .core import format_rational, MonomialIdeal, parse_ideal, parse_rational, render_ideal
from .errors import ComputationLimit, DimensionMismatch, MonomultError, ParseError, ZeroIdeal

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text):
    try:
        q = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return q


def _positive_rational(text):
    q = _rational(text)
    if q <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return q


def _beta(text):
    try:
        beta = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"exponent vector must look like 1,0,2: {text!r}")
    if any(x < 0 for x in beta):
        raise argparse.ArgumentTypeError("exponents must be non-negative")
    return beta


def _common(sub_default):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=sub_default(False))
    p.add_argument("--seed", type=int, default=sub_default(None))
    p.add_argument("--limit", type=int, default=sub_default(None),
                   help="cap on intermediate inequalities and lattice-box size")
    p.add_argument("--config", default=sub_default(None), help="JSON file with oracle settings")
    return p


def _ideal_args(p):
    p.add_argument("ideal", nargs="?", help='monomials, e.g. "x^2, y^3"')
    p.add_argument("--file", help="JSON file {\"n\": int, \"generators\": [[...], ...]}")
    p.add_argument("--n", type=int, help="number of variables")


def build_parser():
    top = _common(lambda d: d)
    sub_common = _common(lambda d: argparse.SUPPRESS)
    parser = _Parser(prog="monomult", parents=[top],
                     description="Newton polyhedra, multiplier ideals and integral closures "
                                 "of monomial ideals.")
    subs = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_):
        p = subs.add_parser(name, parents=[sub_common], help=help_)
        return p

    for name, help_ in [("parse", "print the canonical form"),
                        ("hrep", "facets of the Newton polyhedron"),
                        ("lct", "log canonical threshold"),
                        ("closure", "integral closure")]:
        _ideal_args(add(name, help_))
    p = add("multiplier", "multiplier ideal J(c·a)")
    _ideal_args(p)
    p.add_argument("--c", type=_positive_rational, required=True)
    p = add("jumping", "jumping numbers up to c_max")
    _ideal_args(p)
    p.add_argument("--c-max", dest="c_max", type=_positive_rational, required=True)
    p = add("power-lemma", "compare closure(a^A) with a·closure(a^(A-1))")
    _ideal_args(p)
    p.add_argument("--A", dest="A", type=int)
    p = add("witness", "separating witness vector for a non-member")
    _ideal_args(p)
    p.add_argument("--beta", type=_beta, required=True)
    p.add_argument("--c", type=_positive_rational, default=None)
    p.add_argument("--mode", choices=["multiplier", "closure"], default="multiplier")
    p = add("teissier", "check z^beta·b ⊆ a·b for z^beta in the closure")
    _ideal_args(p)
    p.add_argument("--beta", type=_beta, required=True)
    p = add("verify", "cross-check polyhedral verdicts against the analytic oracle")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--max-dim", dest="max_dim", type=int, default=3)
    p.add_argument("--max-gens", dest="max_gens", type=int, default=4)
    p.add_argument("--max-exp", dest="max_exp", type=int, default=5)
    p.add_argument("--depths", default="1/2,5/6,1,7/5")
    p.add_argument("--margin", type=_rational, default=parse_rational("1/20"))
    p.add_argument("--only", choices=["interior", "noninterior"])
    return parser


def _load_ideal(args):
    if getattr(args, "file", None):
        with open(args.file) as fh:
            data = json.load(fh)
        try:
            return MonomialIdeal.from_dict(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad ideal JSON: {exc}", 0)
    if not args.ideal:
        raise UsageError("an ideal is required (inline or via --file)")
    return parse_ideal(args.ideal, n=args.n)


def _limit(args):
    if args.limit is not None:
        return args.limit
    env = os.environ.get("MONOMULT_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"MONOMULT_LIMIT must be an integer, got {env!r}")
    return None


def _oracle_config(args):
    data = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
    if args.seed is not None:
        data["seed"] = args.seed
    return oracle.OracleConfig.from_dict(data)


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _run(args, out):
    cmd = args.command
    limit = _limit(args)
    if limit is not None:
        polyhedron.DEFAULT_FM_LIMIT = limit
        multiplier.DEFAULT_BOX_LIMIT = limit
        closure.DEFAULT_BOX_LIMIT = limit
    if cmd == "verify":
        depths = tuple(_rational(x) for x in args.depths.split(","))
        spec = oracle.CorpusSpec(cases=args.cases, max_dim=args.max_dim, max_gens=args.max_gens,
                                 max_exp=args.max_exp, depths=depths,
                                 seed=args.seed if args.seed is not None else 0,
                                 margin=args.margin, only=args.only)
        report = oracle.agreement_harness(spec, _oracle_config(args))
        if args.json:
            data = report.to_dict()
            data["summary"].pop("runtime_s")  # keeps stdout reproducible
            print(_dump(data), file=out)
        else:
            for key, val in report.summary().items():
                if key != "runtime_s":
                    print(f"{key}: {val}", file=out)
            print(f"runtime: {report.runtime:.1f} s", file=sys.stderr)
        return EXIT_OK

    a = _load_ideal(args)
    if cmd == "parse":
        print(_dump(a.to_dict()) if args.json else render_ideal(a), file=out)
    elif cmd == "hrep":
        P = polyhedron.build(a, limit=limit)
        if args.json:
            print(_dump(P.to_dict()), file=out)
        else:
            for f in P.facets:
                terms = " + ".join(f"{format_rational(v)}*x{j + 1}"
                                   for j, v in enumerate(f.normal) if v)
                print(f"{terms} >= {f.offset}", file=out)
    elif cmd == "lct":
        val = polyhedron.lct(a, polyhedron.build(a, limit=limit))
        text = "inf" if val == math.inf else format_rational(val)
        print(_dump({"lct": text}) if args.json else text, file=out)
    elif cmd == "multiplier":
        J = multiplier.multiplier_ideal(a, args.c, limit=limit)
        print(_dump(J.to_dict()) if args.json else render_ideal(J), file=out)
    elif cmd == "jumping":
        rep = multiplier.jumping_numbers(a, args.c_max, limit=limit)
        if args.json:
            print(_dump(rep.to_dict()), file=out)
        else:
            for c, J in rep.jumps:
                print(f"{format_rational(c)}\t{render_ideal(J)}", file=out)
    elif cmd == "closure":
        J = closure.integral_closure(a, limit=limit)
        print(_dump(J.to_dict()) if args.json else render_ideal(J), file=out)
    elif cmd == "power-lemma":
        rep = closure.power_lemma_check(a, args.A, limit=limit)
        if args.json:
            print(_dump(rep.to_dict()), file=out)
        else:
            print(f"A = {rep.A}: {'equal' if rep.equal else 'NOT equal'}", file=out)
            print(f"closure(a^A)       = {render_ideal(rep.lhs)}", file=out)
            print(f"a*closure(a^(A-1)) = {render_ideal(rep.rhs)}", file=out)
            print(f"minimal A = {rep.minimal_A}", file=out)
    elif cmd == "witness":
        if len(args.beta) != a.n:
            raise DimensionMismatch(f"--beta has {len(args.beta)} entries, ideal has n={a.n}")
        mode = polyhedron.MULTIPLIER_INTERIOR if args.mode == "multiplier" else polyhedron.CLOSURE_CLOSED
        c = args.c if args.c is not None else 1
        w = polyhedron.witness(polyhedron.build(a, limit=limit), c, args.beta, mode)
        if args.json:
            print(_dump(w.to_dict()), file=out)
        else:
            d = w.to_dict()
            print(f"b = ({', '.join(d['direction'])})  value = {d['value']}  margin = {d['margin']}",
                  file=out)
    elif cmd == "teissier":
        if len(args.beta) != a.n:
            raise DimensionMismatch(f"--beta has {len(args.beta)} entries, ideal has n={a.n}")
        w = closure.teissier_witness(a, args.beta, limit=limit)
        if args.json:
            print(_dump(w.to_dict()), file=out)
        else:
            print(f"b = ({render_ideal(w.b)})  verified = {w.verified}", file=out)
    return EXIT_OK


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    saved = (polyhedron.DEFAULT_FM_LIMIT, multiplier.DEFAULT_BOX_LIMIT, closure.DEFAULT_BOX_LIMIT)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        return _run(args, out)
    except UsageError as exc:
        print(f"monomult: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"monomult: parse error at position {exc.position}: {exc.message}", file=sys.stderr)
        if exc.text is not None:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_PARSE
    except (ZeroIdeal, json.JSONDecodeError) as exc:
        print(f"monomult: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ComputationLimit as exc:
        print(f"monomult: computation limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (MonomultError, ValueError, OSError) as exc:
        print(f"monomult: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        polyhedron.DEFAULT_FM_LIMIT, multiplier.DEFAULT_BOX_LIMIT, closure.DEFAULT_BOX_LIMIT = saved


if __name__ == "__main__":
    sys.exit(main())
