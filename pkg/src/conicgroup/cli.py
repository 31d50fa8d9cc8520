"""Command-line front end.

Exit codes: 0 success or verified, 1 property violated, 2 usage or input
error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, TextIO

from . import scalar
from .classification import classify, normalize, normalization_residuals
from .errors import GeometryError, IrrationalNormalization, KernelBug, NothingVisible
from .group_law import inverse, oplus
from .pascal import Hexagon, pascal_points, pascal_via_group
from .projective import ProjPoint, ProjTransform
from .render import DEFAULT_WINDOW, oplus_drawing, pascal_drawing, render_svg
from .sampler import SamplerConfig, fuzz_suite, run_trial
from .scene import Scene, SceneError, parse_scene

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def format_point(p: ProjPoint) -> str:
    text = repr(p)
    aff = p.to_affine()
    if aff is not None:
        text += " = (" + ", ".join(scalar.format_scalar(c) for c in aff) + ")"
    return text


def format_transform(T: ProjTransform) -> str:
    rows = [[scalar.format_scalar(x) for x in r] for r in T.matrix]
    width = max(len(x) for r in rows for x in r)
    return "\n".join("  [" + "  ".join(x.rjust(width) for x in r) + "]" for r in rows)


def _load(path: str) -> Scene:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read scene {path!r}: {exc.strerror}") from None
    scene = parse_scene(text)
    if scene.epsilon is not None:
        scalar.set_epsilon(scene.epsilon)
    return scene


def _hexagon(scene: Scene, names: Sequence[str]) -> Hexagon:
    if len(names) != 6:
        raise UsageError(f"a hexagon needs six point names, got {len(names)}")
    return Hexagon(scene.build_conic(), tuple(scene.point(n) for n in names))


def cmd_oplus(args, out: TextIO) -> int:
    scene = _load(args.scene)
    mc = scene.marked_conic()
    a, b = scene.point(args.p1), scene.point(args.p2)
    res = oplus(mc, a, b)
    print(format_point(res.sum), file=out)
    if args.trace:
        print(f"chord: {res.trace.chord!r}", file=out)
        print(f"meet on L: {format_point(res.trace.meet_on_L)}", file=out)
        print(f"line o-p: {res.trace.second_line!r}", file=out)
    return EXIT_OK


def cmd_inverse(args, out: TextIO) -> int:
    scene = _load(args.scene)
    print(format_point(inverse(scene.marked_conic(), scene.point(args.p))), file=out)
    return EXIT_OK


def cmd_classify(args, out: TextIO) -> int:
    scene = _load(args.scene)
    print(classify(scene.marked_conic()).value, file=out)
    return EXIT_OK


def cmd_normalize(args, out: TextIO) -> int:
    scene = _load(args.scene)
    mc = scene.marked_conic()
    try:
        n = normalize(mc)
        backend = "exact" if mc.conic.is_exact else "float"
    except IrrationalNormalization as exc:
        print(f"note: {exc}; rerunning on the float backend", file=sys.stderr)
        n = normalize(mc.to_float())
        backend = "float"
    print(f"class: {n.klass.value}", file=out)
    print(f"backend: {backend}", file=out)
    print("transform:", file=out)
    print(format_transform(n.transform), file=out)
    if backend == "float":
        res = normalization_residuals(mc, n)
        print("residuals: " + " ".join(f"{k}={v:.3e}" for k, v in res.items()), file=out)
    return EXIT_OK


def cmd_verify_pascal(args, out: TextIO) -> int:
    scene = _load(args.scene)
    res = pascal_points(_hexagon(scene, args.names))
    for name, m in zip("pqr", res.meets):
        print(f"{name}: {format_point(m)}", file=out)
    if res.pascal_line is not None:
        print(f"pascal line: {res.pascal_line!r}", file=out)
    if res.trivial_reason:
        print(f"trivial: {res.trivial_reason}", file=out)
    print("collinear" if res.collinear else "NOT collinear", file=out)
    return EXIT_OK if res.collinear else EXIT_VIOLATED


def cmd_pascal_group(args, out: TextIO) -> int:
    scene = _load(args.scene)
    h = _hexagon(scene, args.names)
    res = pascal_points(h)
    if res.trivial_reason:
        print(f"trivially collinear: {res.trivial_reason}", file=out)
        return EXIT_OK
    ok = pascal_via_group(h)
    agree = ok == res.collinear
    print(f"group route: {'collinear' if ok else 'NOT collinear'}", file=out)
    print(f"determinant route: {'collinear' if res.collinear else 'NOT collinear'}", file=out)
    if not agree:
        raise KernelBug("group route and determinant route disagree")
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_fuzz(args, out: TextIO) -> int:
    cfg = SamplerConfig(seed=args.seed, trials=args.trials,
                        coefficient_bound=args.bound, backend=args.backend)
    if args.replay is not None:
        failed = False
        for o in run_trial(args.replay, cfg):
            failed |= o.status == "fail"
            print(f"{o.prop:<16}{o.status}{': ' + o.detail if o.detail else ''}", file=out)
        return EXIT_VIOLATED if failed else EXIT_OK
    report = fuzz_suite(cfg)
    out.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_VIOLATED


def _parse_window(text: str):
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad window {text!r}") from None
    if len(vals) != 4 or vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise UsageError("window is xmin,xmax,ymin,ymax with min < max")
    return vals


def cmd_render(args, out: TextIO) -> int:
    scene = _load(args.scene)
    kind, _, rest = args.construction.partition(":")
    names = [n for n in rest.split(",") if n]
    if kind == "oplus":
        if len(names) != 2:
            raise UsageError("oplus construction takes two point names: oplus:P,Q")
        mc = scene.marked_conic()
        a, b = scene.point(names[0]), scene.point(names[1])
        drawing = oplus_drawing(mc, a, b, oplus(mc, a, b))
    elif kind == "pascal":
        h = _hexagon(scene, names)
        drawing = pascal_drawing(h, pascal_points(h))
    else:
        raise UsageError(f"unknown construction {kind!r}; use oplus:P,Q or pascal:a,b,c,d,e,f")
    svg = render_svg(drawing, window=args.window, size=args.size)
    if args.output == "-":
        out.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.output}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conicgroup", description="Group law on marked conics and Pascal's theorem.")
    parser.add_argument("--epsilon", type=float, default=None,
                        help="relative tolerance for the float backend (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("oplus", help="add two points of a marked conic")
    p.add_argument("scene")
    p.add_argument("p1")
    p.add_argument("p2")
    p.add_argument("--trace", action="store_true", help="also print the construction")
    p.set_defaults(func=cmd_oplus)

    p = sub.add_parser("inverse", help="inverse of a point")
    p.add_argument("scene")
    p.add_argument("p")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("classify", help="parabola, hyperbola or ellipse class")
    p.add_argument("scene")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normalize", help="transform onto the standard marked conic")
    p.add_argument("scene")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("verify-pascal", help="check the three meets are collinear")
    p.add_argument("scene")
    p.add_argument("names", nargs="+")
    p.set_defaults(func=cmd_verify_pascal)

    p = sub.add_parser("pascal-group", help="derive Pascal through the group law")
    p.add_argument("scene")
    p.add_argument("names", nargs="+")
    p.set_defaults(func=cmd_pascal_group)

    p = sub.add_parser("fuzz", help="randomized property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--backend", choices=scalar.BACKENDS, default=scalar.EXACT)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--replay", type=int, default=None, metavar="KEY",
                   help="rerun the single trial with this key from a report")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("render", help="draw a construction as SVG")
    p.add_argument("scene")
    p.add_argument("construction", help="oplus:P,Q or pascal:a,b,c,d,e,f")
    p.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    p.add_argument("--window", type=_parse_window, default=DEFAULT_WINDOW,
                   help="xmin,xmax,ymin,ymax; write --window=-2,2,-2,2 when it starts with a minus")
    p.add_argument("--size", type=int, default=800)
    p.set_defaults(func=cmd_render)
    return parser


def run_command(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    eps_before = scalar.get_epsilon()
    try:
        args = build_parser().parse_args(argv)
        if args.epsilon is not None:
            scalar.set_epsilon(args.epsilon)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except SceneError as exc:
        print(f"scene error: {exc}", file=err)
        return EXIT_USAGE
    except (GeometryError, NothingVisible, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    except AssertionError as exc:  # KernelBug included
        print(f"internal invariant failure: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    finally:
        scalar.set_epsilon(eps_before)


def main() -> None:
    sys.exit(run_command())
