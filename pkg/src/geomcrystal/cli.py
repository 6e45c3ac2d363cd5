"""Command-line surface: actions, braid moves, tropicalization, verification.

Exit codes: 0 success / all properties pass, 1 verification property failure,
2 bad usage or invalid input (argparse uses 2 as well).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .braid import BraidMoveSpec, apply_move, connect_words, tropical_braid
from .cartan import CartanMatrix, is_reduced
from .errors import GeomCrystalError
from .geometric import (
    GeometricPoint,
    e_act,
    e_act_recursive,
    symmetric_chart,
    symmetric_chart_values,
)
from .kashiwara import BtildeElement, TensorCrystalElement, btilde_e, e_kashiwara, e_pow
from .semifield import RAT, TROP, semiring_named
from .verify import SUITE_NAMES, RunConfig, format_report, run_suite


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(obj, fmt):
    if fmt == "human":
        print(json.dumps(obj, indent=1, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True))


def _load_cartan(args, obj=None):
    if obj is not None and "cartan" in obj:
        return CartanMatrix.from_json(obj["cartan"])
    if getattr(args, "cartan", None):
        return CartanMatrix.from_json(_read_json(args.cartan))
    raise GeomCrystalError("no Cartan data: embed it in the JSON or pass --cartan")


def _load_point(args):
    obj = _read_json(args.point)
    cartan = _load_cartan(args, obj)
    return GeometricPoint.from_json(obj, cartan=cartan, semiring=args.semiring)


def _parse_c(sr, text):
    return sr.parse(text)


def cmd_act(args):
    sr = semiring_named(args.semiring)
    if args.chart == "symmetric":
        obj = _read_json(args.point)
        cartan = _load_cartan(args, obj)
        avals = [sr.parse(v) if isinstance(v, str) else sr.element(v) for v in obj["coords"]]
        p = symmetric_chart(cartan, sr, avals)
        p = e_act(p, args.i, _parse_c(sr, args.c))
        out = p.to_json()
        out["coords"] = [sr.dump(v) for v in symmetric_chart_values(p)]
        out["chart"] = "symmetric"
        _emit(out, args.format)
        return 0
    p = _load_point(args)
    if args.reduced and not is_reduced(p.cartan, p.word):
        raise GeomCrystalError(f"word {list(p.word)} is not reduced")
    act = e_act_recursive if args.recursive else e_act
    q = act(p, args.i, _parse_c(p.semiring, args.c))
    _emit(q.to_json(), args.format)
    return 0


def cmd_braid(args):
    if args.connect_from is not None:
        cartan = _load_cartan(args)
        src = tuple(json.loads(args.connect_from))
        dst = tuple(json.loads(args.connect_to))
        path = connect_words(cartan, src, dst)
        _emit(
            {"from": list(src), "to": list(dst), "path": None if path is None else [m.to_json() for m in path]},
            args.format,
        )
        return 0
    p = _load_point(args)
    spec = BraidMoveSpec.from_json(_read_json(args.move))
    q = apply_move(p, spec)
    _emit(q.to_json(), args.format)
    return 0


def cmd_crystal(args):
    obj = _read_json(args.element)
    if args.op == "btilde-e":
        x = BtildeElement(tuple(obj["values"]))
        out = btilde_e(x, args.i, int(args.c))
        _emit({"values": list(out.values)}, args.format)
        return 0
    cartan = _load_cartan(args, obj)
    b = TensorCrystalElement.from_json(obj, cartan=cartan)
    if args.op == "e":
        out = e_pow(b, args.i, int(args.c))
    elif args.op == "e-step":
        out = e_kashiwara(b, args.i)
    elif args.op == "braid":
        out = tropical_braid(b, BraidMoveSpec.from_json(_read_json(args.move)))
    else:
        raise GeomCrystalError(f"unknown crystal op {args.op!r}")
    _emit(out.to_json(), args.format)
    return 0


def cmd_tropicalize(args):
    obj = _read_json(args.point)
    cartan = _load_cartan(args, obj)
    base = Fraction(args.base)
    if base <= 1:
        raise GeomCrystalError("base must exceed 1")
    if args.lift:
        p = GeometricPoint.from_json(obj, cartan=cartan, semiring=TROP)
        coords = [RAT.dump(base ** z.value) for z in p.coords]
        out = p.to_json()
        out["coords"] = coords
        _emit(out, args.format)
        return 0
    p = GeometricPoint.from_json(obj, cartan=cartan, semiring=RAT)
    degrees = []
    for c in p.coords:
        m = 0
        x = c
        while x > 1:
            x /= base
            m += 1
        while x < 1:
            x *= base
            m -= 1
        if x != 1:
            raise GeomCrystalError(
                f"coordinate {RAT.dump(c)} is not an exact power of {args.base}"
            )
        degrees.append(m)
    out = p.to_json()
    out["coords"] = degrees
    _emit(out, args.format)
    return 0


def cmd_chart(args):
    sr = semiring_named(args.semiring)
    if args.inverse:
        obj = _read_json(args.point)
        cartan = _load_cartan(args, obj)
        p = GeometricPoint.from_json(obj, cartan=cartan, semiring=sr)
        vals = symmetric_chart_values(p)
        _emit({"cartan": cartan.to_json(), "values": [sr.dump(v) for v in vals]}, args.format)
        return 0
    cartan = _load_cartan(args)
    vals = [sr.parse(v) if isinstance(v, str) else sr.element(v) for v in json.loads(args.values)]
    p = symmetric_chart(cartan, sr, vals)
    _emit(p.to_json(), args.format)
    return 0


def cmd_verify(args):
    cfg = RunConfig(seed=args.seed, trials=args.trials)
    results = run_suite(args.suite, cfg)
    print(format_report(args.suite, cfg, results, args.format))
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="geomcrystal",
        description="Geometric crystals on Schubert-cell tori: exact actions, braid moves, tropicalization, verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cartan", help="JSON file with {'index': [...], 'a': [[...]]}")
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("act", help="apply e_i^c to a chart point")
    common(p)
    p.add_argument("--point", required=True, help="point JSON file or - for stdin")
    p.add_argument("--i", required=True, help="index")
    p.add_argument("--c", required=True, help="exponent (rational p/q or tropical integer)")
    p.add_argument("--semiring", choices=("rat", "trop"), default="rat")
    p.add_argument("--chart", choices=("symmetric",), help="act through the type-A chart")
    p.add_argument("--recursive", action="store_true", help="use the signed recursion route")
    p.add_argument("--reduced", action="store_true", help="demand a reduced word")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("braid", help="apply a rank-2 move, or connect two words by moves")
    common(p)
    p.add_argument("--point", help="point JSON file")
    p.add_argument("--move", help="move JSON file: {class, i, j, pos}")
    p.add_argument("--semiring", choices=("rat", "trop"), default=None)
    p.add_argument("--connect-from", help="source word as JSON list")
    p.add_argument("--connect-to", help="target word as JSON list")
    p.set_defaults(fn=cmd_braid)

    p = sub.add_parser("crystal", help="tensor-crystal operations")
    common(p)
    p.add_argument("--element", required=True, help="element JSON file or -")
    p.add_argument("--op", required=True, choices=("e", "e-step", "braid", "btilde-e"))
    p.add_argument("--i", help="index")
    p.add_argument("--c", help="power (nonnegative integer; any integer for btilde-e)")
    p.add_argument("--move", help="move JSON for --op braid")
    p.set_defaults(fn=cmd_crystal)

    p = sub.add_parser("tropicalize", help="map monomial rational points to max-plus degrees")
    common(p)
    p.add_argument("--point", required=True)
    p.add_argument("--base", default="2", help="monomial base t (default 2)")
    p.add_argument("--lift", action="store_true", help="inverse: degrees -> t^m")
    p.set_defaults(fn=cmd_tropicalize)

    p = sub.add_parser("chart", help="type-A symmetric chart conversions")
    common(p)
    p.add_argument("--values", help="chart values as a JSON list")
    p.add_argument("--point", help="point JSON (with --inverse)")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--semiring", choices=("rat", "trop"), default="rat")
    p.set_defaults(fn=cmd_chart)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GeomCrystalError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
