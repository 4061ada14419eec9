"""Command-line entry point ``tmk``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 when a
Groebner budget ran out but the certificate route covered the gap, and
64 for unusable arguments (an invalid lambda among them).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .fan import Fan, cox_data, mpcp_refine, support_dual_cone, total_space_fan, validate
from .fixtures import load
from .groebner import GroebnerBudgetExceeded, Ideal, groebner, radical_membership
from .ideal import InvalidLambda, LambdaParam
from .pipelines import (bb_pipeline, build_instance, bundle_divisors, lt_fan, lt_pipeline,
                        n2_pipeline, part_slot)
from .poly import Ring
from .report import bundle, render
from .triangulation import (LabelMismatch, PointConfiguration, bb_star_triangulation,
                            check_lt_conditions, covers_hull, refine_to_triangulation,
                            regular_subdivision, regularity_witness)

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    # exit code 2 already means "undecided", so usage errors get their own code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _lambda(text: str) -> LambdaParam:
    try:
        return LambdaParam.parse(text)
    except InvalidLambda as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weights(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma separated list of rationals: {text!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _read_json(path: str):
    return json.loads(Path(path).read_text())


# ---------------------------------------------------------------------------
# built-in objects

def _builtin_fan(name: str) -> Fan:
    inst = build_instance(3)
    if name == "normal":
        return inst.normal
    if name == "mpcp":
        return mpcp_refine(inst.normal)
    if name == "lt":
        return lt_fan(inst)
    if name == "n2-normal":
        return build_instance(2, var_offset=1).normal
    fine = mpcp_refine(inst.normal)
    if name == "nabla-total":
        slots = [part_slot(inst, j) for j in range(len(fine.rays))]
        return total_space_fan(fine, bundle_divisors(inst, len(fine.rays), slots))
    if name == "lt-total":
        sigma = lt_fan(inst)
        slots = [part_slot(inst, j) for j in range(len(sigma.rays))]
        return total_space_fan(sigma, bundle_divisors(inst, len(sigma.rays), slots))
    raise KeyError(name)


FANS = ("normal", "mpcp", "lt", "n2-normal", "lt-total", "nabla-total")


def _fan_arg(args) -> Fan:
    if args.fan:
        return Fan.from_json(_read_json(args.fan))
    return _builtin_fan(args.builtin)


def _config_arg(args) -> tuple[PointConfiguration, list]:
    cf = load("lt_configuration")
    if args.config:
        data = _read_json(args.config)
        config = PointConfiguration.from_json(data.get("configuration", data))
    else:
        config = PointConfiguration.from_json(cf["configuration"])
    if args.weights is not None:
        weights = args.weights
    elif not args.config:
        weights = [cf["weights"][l] for l in config.labels]
    else:
        print("tmk: --weights is required with --config", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    if len(weights) != len(config.labels):
        print(f"tmk: {len(weights)} weights for {len(config.labels)} points", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return config, weights


# ---------------------------------------------------------------------------
# verbs

def cmd_bb(args):
    expect = None
    if args.expect:
        data = _read_json(args.expect)
        expect = data["max_cones"] if isinstance(data, dict) else data
    checks = bb_pipeline(skip_mpcp=args.skip_mpcp, expect=expect)
    params = {"skip_mpcp": args.skip_mpcp, "expect": bool(expect)}
    return bundle("bb", checks, params, args.timings)


def cmd_lt(args):
    checks = lt_pipeline(args.lambda_, args.budget, args.jobs)
    return bundle("lt", checks, {"lambda": str(args.lambda_), "budget": args.budget},
                  args.timings)


def cmd_n2(args):
    lam = args.lambda_ or LambdaParam(Fraction(1, 2))
    checks = n2_pipeline(lam, args.budget, args.jobs)
    return bundle("n2", checks, {"lambda": str(lam), "budget": args.budget}, args.timings)


def cmd_subdivide(args):
    config, weights = _config_arg(args)
    sub = regular_subdivision(config, weights)
    return {"weights": [str(w) for w in weights], **sub.to_json(),
            "is_triangulation": sub.is_triangulation, "volumes_cover_hull": covers_hull(sub)}


def cmd_triangulate(args):
    config, weights = _config_arg(args)
    sub = regular_subdivision(config, weights)
    tri = refine_to_triangulation(config, sub)
    w = regularity_witness(config, tri)
    out = {"weights": [str(x) for x in weights], "subdivision_cells": len(sub.cells),
           **tri.to_json(), "witness": [str(x) for x in w] if w is not None else None}
    try:
        rep = check_lt_conditions(tri)
        out["lt_conditions"] = {"passed": rep.passed, "missing": rep.missing,
                                "violators": rep.violators, "note": rep.note}
    except LabelMismatch:
        pass
    return out


def _ring(args) -> Ring:
    names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    return Ring(names, args.order)


def cmd_groebner(args):
    ring = _ring(args)
    ideal = Ideal(ring, [ring.parse(p) for p in args.polys])
    gb = groebner(ideal, args.budget)
    return {**gb.to_json(), "pairs": gb.stats.get("pairs")}


def cmd_radical(args):
    ring = _ring(args)
    ideal = Ideal(ring, [ring.parse(p) for p in args.ideal])
    f = ring.parse(args.f)
    return {"f": str(f), "ideal": [str(g) for g in ideal.generators],
            "member": radical_membership(f, ideal, args.budget)}


def cmd_cox(args):
    f = _fan_arg(args)
    cd = cox_data(f)
    names = [f"x{i}" for i in range(len(f.rays))]
    irrelevant = [" * ".join(n for n, e in zip(names, g) if e) for g in cd.irrelevant_generators]
    return {"rays": len(f.rays), "torus_rank": cd.torus_rank,
            "torsion": [str(d) for d in cd.torsion_factors],
            "group_order": str(cd.torsion_order), "irrelevant_ideal": irrelevant}


def cmd_dualcone(args):
    f = _fan_arg(args)
    return {"rays": [[str(x) for x in r] for r in f.rays],
            "dual_cone": [[str(x) for x in p] for p in support_dual_cone(f)]}


EMITTABLE = FANS + ("lt-configuration", "lt-subdivision", "lt-triangulation",
                    "bb-triangulation")


def cmd_emit(args):
    if args.object == "report":
        if not args.path:
            print("tmk: emit report needs a report file", file=sys.stderr)
            raise SystemExit(EX_USAGE)
        return _read_json(args.path)
    if args.object in FANS:
        f = _builtin_fan(args.object)
        return {**f.to_json(), "validation": _validation(f)}
    cf = load("lt_configuration")
    config = PointConfiguration.from_json(cf["configuration"])
    if args.object == "lt-configuration":
        return config.to_json()
    weights = [cf["weights"][l] for l in config.labels]
    sub = regular_subdivision(config, weights)
    if args.object == "lt-subdivision":
        return sub.to_json()
    if args.object == "lt-triangulation":
        return refine_to_triangulation(config, sub).to_json()
    return bb_star_triangulation(_builtin_fan("mpcp"), config).to_json()


def _validation(f: Fan) -> dict:
    v = validate(f)
    return {"is_fan": v.is_fan, "is_simplicial": v.is_simplicial, "is_complete": v.is_complete}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--timings", action="store_true",
                        help="include wall times (makes output run dependent)")
    groeb = argparse.ArgumentParser(add_help=False)
    groeb.add_argument("--budget", type=_positive, default=None,
                       help="S-pair budget per Groebner run (default: TMK_BUDGET or 200000)")
    groeb.add_argument("--jobs", type=_positive, default=1,
                       help="worker processes for independent membership tests")
    lam = argparse.ArgumentParser(add_help=False)
    lam.add_argument("--lambda", dest="lambda_", type=_lambda, metavar="P/Q")
    weights = argparse.ArgumentParser(add_help=False)
    weights.add_argument("--config", help="point configuration JSON (default: built-in)")
    weights.add_argument("--weights", type=_weights, metavar="CSV")
    fan = argparse.ArgumentParser(add_help=False)
    g = fan.add_mutually_exclusive_group()
    g.add_argument("--fan", help="fan JSON with dim, rays and max_cones")
    g.add_argument("--builtin", choices=FANS, default="lt")
    poly = argparse.ArgumentParser(add_help=False)
    poly.add_argument("--vars", required=True, help="comma separated variable names, smallest first")
    poly.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")

    p = _Parser(prog="tmk", description="Exact toric mirror computations and their checks.")
    p.add_argument("--version", action="version", version=f"tmk {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("bb", parents=[common], help="nef partition, dual, normal fan, refinement")
    s.add_argument("--skip-mpcp", action="store_true")
    s.add_argument("--expect", help="JSON cone list to compare with the refinement")
    s.set_defaults(func=cmd_bb)

    s = sub.add_parser("lt", parents=[common, groeb, lam], help="quotient side and chamber checks")
    s.set_defaults(func=cmd_lt, lambda_=None)

    s = sub.add_parser("n2", parents=[common, groeb, lam], help="the pair of quadrics in P^3")
    s.set_defaults(func=cmd_n2)

    s = sub.add_parser("subdivide", parents=[common, weights], help="regular subdivision")
    s.set_defaults(func=cmd_subdivide)
    s = sub.add_parser("triangulate", parents=[common, weights],
                       help="regular subdivision refined to a triangulation, with a witness")
    s.set_defaults(func=cmd_triangulate)

    s = sub.add_parser("groebner", parents=[common, poly], help="reduced Groebner basis")
    s.add_argument("polys", nargs="+")
    s.add_argument("--budget", type=_positive, default=None)
    s.set_defaults(func=cmd_groebner)
    s = sub.add_parser("radical", parents=[common, poly], help="radical membership test")
    s.add_argument("f")
    s.add_argument("--ideal", nargs="+", required=True)
    s.add_argument("--budget", type=_positive, default=None)
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("cox", parents=[common, fan], help="Cox quotient data of a fan")
    s.set_defaults(func=cmd_cox)
    s = sub.add_parser("dualcone", parents=[common, fan], help="dual cone of a fan's support")
    s.set_defaults(func=cmd_dualcone)

    s = sub.add_parser("emit", parents=[common], help="serialise a built-in object or a report")
    s.add_argument("object", choices=EMITTABLE + ("report",))
    s.add_argument("path", nargs="?", help="report file for 'emit report'")
    s.set_defaults(func=cmd_emit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "lt" and args.lambda_ is None:
        args.lambda_ = LambdaParam(Fraction(2))
    try:
        data = args.func(args)
    except GroebnerBudgetExceeded as exc:
        print(f"tmk: Groebner budget exhausted after {exc.pairs} S-pairs", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"tmk: {exc}", file=sys.stderr)
        return 1
    text = render(data, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if isinstance(data, dict) and "summary" in data:
        return data["summary"]["exit_code"]
    return 0


if __name__ == "__main__":
    sys.exit(main())
