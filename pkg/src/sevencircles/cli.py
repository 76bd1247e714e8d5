"""Command-line front end.

Exit codes: 0 computed (whatever the verdict), 2 bad input, 3 no closure root
on the search arc, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import models
from .circles import Horodisk, alternating_perimeter
from .errors import GeometryError
from .hexagon import (
    DEFAULT_TOL,
    HexagonReport,
    IdealHexagon,
    analyze_hexagon,
    build_tangent_chain,
    point_reflection_symmetry,
    random_hexagon,
    random_symmetric_hexagon,
    small_triangle,
    solve_closure,
    trisum_residual,
    verify_seven_circles,
)
from .svg import LAYERS, PRESETS, RenderOptions, parse_layers, render_svg

EXIT_OK, EXIT_BAD_INPUT, EXIT_NO_ROOT, EXIT_IO = 0, 2, 3, 4
SAMPLE_CHUNK = 250

REPORT_KEYS = """\
report keys (one "key = value" per line):
  command, angles_deg | angles_rad, sizes, tol
  alternating_perimeter        signed, side k from vertex k to k+1, odd sides positive
  abs_alternating_perimeter
  triangle_perimeter           perimeter of the small triangle of the main diagonals
  q1, q2, q3                   diagonal crossings (1&2, 3&1, 2&3) as "x y"
  triple_point                 true iff triangle_perimeter < tol
  symmetry_fixed_point         "x y" or none
  theorem3_residual            |alternating_perimeter| - 2 * triangle_perimeter
  trisum_residual              semi-ideal triangle sum, none if the triangle is degenerate
chain reports add: s1, chain_sizes, theta6_deg (with --solve-closure), closure_residual,
  tangent_pairs, closed, verdict (PASS/FAIL)
"""


class UsageError(Exception):
    pass


@dataclass
class Scene:
    hexagon: tuple[float, ...] | None = None
    chain: tuple[float, ...] | None = None
    s1: float = 1.0
    sizes: tuple[float, ...] | None = None
    render: RenderOptions = field(default_factory=RenderOptions)
    # angles exactly as the user gave them, for the report echo
    input_angles: tuple[float, ...] = ()
    input_unit: str = "deg"

    def __post_init__(self):
        if (self.hexagon is None) == (self.chain is None):
            raise UsageError("scene needs exactly one of a hexagon or a chain")
        if self.sizes is not None and (len(self.sizes) != 6 or any(not s > 0 for s in self.sizes)):
            raise UsageError("sizes must be six positive numbers")
        if not self.s1 > 0:
            raise UsageError("s1 must be positive")


def load_scene(path: str) -> Scene:
    """Read a JSON scene; angle fields are in degrees as their names say."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read scene {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"scene {path} is not valid JSON: {exc}") from exc
    render = data.get("render", {})
    options = RenderOptions(
        width=int(render.get("width", 600)),
        stroke=float(render.get("stroke", 2.0)),
        diagonal_stroke=float(render.get("diagonal_stroke", 3.0)),
        layers=parse_layers(render.get("layers", "all")),
    )
    to_rad = lambda xs: tuple(math.radians(float(x)) for x in xs)  # noqa: E731
    raw = data.get("hexagon_deg", data.get("chain_deg", ()))
    return Scene(
        hexagon=to_rad(data["hexagon_deg"]) if "hexagon_deg" in data else None,
        chain=to_rad(data["chain_deg"]) if "chain_deg" in data else None,
        s1=float(data.get("s1", 1.0)),
        sizes=tuple(float(s) for s in data["sizes"]) if "sizes" in data else None,
        render=options,
        input_angles=tuple(float(x) for x in raw),
    )


def fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, complex):
        return f"{fmt(v.real)} {fmt(v.imag)}"
    if isinstance(v, float):
        return repr(v + 0.0)
    if isinstance(v, (list, tuple)):
        return " ".join(fmt(x) for x in v)
    return str(v)


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def emit(report: dict, json_path: str | None) -> None:
    for key, value in report.items():
        print(f"{key} = {fmt(value)}")
    if json_path:
        try:
            with open(json_path, "w") as fh:
                json.dump({k: _jsonable(v) for k, v in report.items()}, fh, indent=2, sort_keys=False)
                fh.write("\n")
        except OSError as exc:
            raise OSError(f"cannot write {json_path}: {exc}") from exc


def _angles_echo(scene: Scene) -> tuple[str, tuple[float, ...]]:
    return f"angles_{scene.input_unit}", scene.input_angles


def hexagon_fields(rep: HexagonReport) -> dict:
    T = rep.triangle
    return {
        "alternating_perimeter": rep.alternating_perimeter,
        "abs_alternating_perimeter": rep.abs_alternating_perimeter,
        "triangle_perimeter": T.perimeter,
        "q1": T.q1,
        "q2": T.q2,
        "q3": T.q3,
        "triple_point": rep.triple_point,
        "symmetry_fixed_point": rep.fixed_point,
        "theorem3_residual": rep.theorem3_residual,
        "trisum_residual": rep.trisum_residual,
    }


# scene assembly from argv


def _scene_from_args(args, kind: str) -> Scene:
    if args.scene:
        scene = load_scene(args.scene)
        if getattr(args, "layers", None) is not None:
            scene.render = RenderOptions(scene.render.width, scene.render.stroke,
                                         scene.render.diagonal_stroke, parse_layers(args.layers))
        return scene
    if not args.angles:
        raise UsageError("give angles on the command line or --scene FILE")
    conv = (lambda x: x) if args.radians else math.radians
    thetas = tuple(conv(a) for a in args.angles)
    options = RenderOptions(
        width=getattr(args, "width", 600),
        layers=parse_layers(args.layers) if getattr(args, "layers", None) else LAYERS,
    )
    sizes = tuple(args.sizes) if getattr(args, "sizes", None) else None
    echo = dict(input_angles=tuple(args.angles), input_unit="rad" if args.radians else "deg")
    if kind == "hexagon":
        return Scene(hexagon=thetas, sizes=sizes, render=options, **echo)
    s1 = getattr(args, "s1", None)
    return Scene(chain=thetas, s1=1.0 if s1 is None else s1, render=options, **echo)


def _resolve_chain_angles(scene: Scene, args) -> tuple[tuple[float, ...], float | None]:
    thetas = scene.chain
    if len(thetas) == 6 and not args.solve_closure:
        return thetas, None
    if len(thetas) != 5 or not args.solve_closure:
        raise UsageError("chain needs six angles, or five with --solve-closure")
    arc = None
    if args.arc:
        conv = (lambda x: x) if args.radians else math.radians
        arc = (conv(args.arc[0]), conv(args.arc[1]))
    theta6 = solve_closure(thetas, scene.s1, arc)
    if theta6 is None:
        raise _NoRoot()
    return thetas + (theta6,), theta6


class _NoRoot(Exception):
    pass


# subcommands


def cmd_convert(args) -> int:
    try:
        out = models.convert(tuple(args.coords), args.from_model, args.to_model)
    except (ValueError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(" ".join(f"{v + 0.0:.15g}" for v in out))
    return EXIT_OK


def cmd_hexagon(args) -> int:
    scene = _scene_from_args(args, "hexagon")
    if scene.hexagon is None:
        raise UsageError("scene has no hexagon")
    P = IdealHexagon.from_radians(scene.hexagon)
    rep = analyze_hexagon(P, scene.sizes, args.tol)
    key, angles = _angles_echo(scene)
    report = {"command": "hexagon", key: angles, "sizes": rep.sizes, "tol": args.tol}
    report.update(hexagon_fields(rep))
    emit(report, args.json)
    return EXIT_OK


def build_scene_chain(scene: Scene, args):
    thetas, theta6 = _resolve_chain_angles(scene, args)
    return build_tangent_chain(thetas, scene.s1), theta6


def cmd_chain(args) -> int:
    scene = _scene_from_args(args, "chain")
    if scene.chain is None:
        raise UsageError("scene has no chain")
    chain, theta6 = build_scene_chain(scene, args)
    rep = verify_seven_circles(chain, args.tol)
    key, angles = _angles_echo(scene)
    report = {"command": "chain", key: angles, "s1": scene.s1, "tol": args.tol}
    if theta6 is not None:
        report[f"theta6_{scene.input_unit}"] = theta6 if scene.input_unit == "rad" else math.degrees(theta6)
    report["chain_sizes"] = chain.sizes
    report["closure_residual"] = chain.closure_residual
    report.update(hexagon_fields(rep.hexagon))
    report["tangent_pairs"] = rep.tangent_pairs
    report["closed"] = rep.closed
    report["verdict"] = rep.verdict
    emit(report, args.json)
    return EXIT_OK


def _sample_chunk(job) -> dict:
    mode, n, seed_seq = job
    rng = np.random.default_rng(seed_seq)
    stats = {"t3": 0.0, "t3_rel": 0.0, "trisum": None, "absA": 0.0, "perim": 0.0, "fixed": 0.0}
    for _ in range(n):
        if mode == "random":
            P, centre = random_hexagon(rng), None
        else:
            P, centre = random_symmetric_hexagon(rng)
        A = alternating_perimeter(P, np.exp(rng.uniform(-2.0, 2.0, 6)))
        T = small_triangle(P)
        res = abs(abs(A) - 2.0 * T.perimeter)
        stats["t3"] = max(stats["t3"], res)
        stats["t3_rel"] = max(stats["t3_rel"], res / (1.0 + T.perimeter))
        stats["absA"] = max(stats["absA"], abs(A))
        stats["perim"] = max(stats["perim"], T.perimeter)
        if not T.degenerate:
            r = abs(trisum_residual(P, np.exp(rng.uniform(-2.0, 2.0, 6))))
            stats["trisum"] = r if stats["trisum"] is None else max(stats["trisum"], r)
        if centre is not None:
            fp = point_reflection_symmetry(P)
            err = math.inf if fp is None else abs(fp.z - centre)
            stats["fixed"] = max(stats["fixed"], err)
    return stats


def run_sample(count: int, seed: int, mode: str, workers: int = 1) -> dict:
    """Deterministic for a given seed: chunking never depends on ``workers``."""
    sizes = [SAMPLE_CHUNK] * (count // SAMPLE_CHUNK)
    if count % SAMPLE_CHUNK:
        sizes.append(count % SAMPLE_CHUNK)
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(mode, n, s) for n, s in zip(sizes, seqs)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sample_chunk, jobs))
    else:
        parts = [_sample_chunk(j) for j in jobs]
    trisums = [p["trisum"] for p in parts if p["trisum"] is not None]
    out = {
        "command": "sample",
        "mode": mode,
        "count": count,
        "seed": seed,
        "max_theorem3_residual": max(p["t3"] for p in parts),
        "max_theorem3_relative": max(p["t3_rel"] for p in parts),
        "max_trisum_residual": max(trisums) if trisums else None,
    }
    if mode == "symmetric":
        out["max_abs_alternating_perimeter"] = max(p["absA"] for p in parts)
        out["max_triangle_perimeter"] = max(p["perim"] for p in parts)
        out["max_fixed_point_error"] = max(p["fixed"] for p in parts)
    return out


def cmd_sample(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    seed = args.seed if args.seed is not None else 0
    emit(run_sample(args.count, seed, args.mode, args.workers), args.json)
    return EXIT_OK


def render_scene(scene: Scene, args) -> str:
    if scene.hexagon is not None:
        P = IdealHexagon.from_radians(scene.hexagon)
        sizes = scene.sizes or (1.0,) * 6
        disks = tuple(Horodisk(v, s) for v, s in zip(P, sizes))
        return render_svg(P, disks, scene.render)
    chain, _ = build_scene_chain(scene, args)
    return render_svg(IdealHexagon(chain.bases), chain.horodisks, scene.render)


def cmd_render(args) -> int:
    scene = _scene_from_args(args, args.kind)
    text = render_scene(scene, args)
    try:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=d(DEFAULT_TOL), help="verdict tolerance (default 1e-8)")
    p.add_argument("--radians", action="store_true", default=d(False), help="angles are radians, not degrees")
    p.add_argument("--seed", type=int, default=d(None), help="random seed (sample)")
    p.add_argument("--json", metavar="PATH", default=d(None), help="also write the report as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sevencircles",
        description="Hyperbolic verification of the Seven Circles Theorem.",
        epilog=REPORT_KEYS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_, epilog=REPORT_KEYS,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        _add_globals(p, suppress=True)
        return p

    p = add("convert", "convert a point between the klein, poincare and hemisphere models")
    p.add_argument("coords", type=float, nargs="+")
    p.add_argument("--from", dest="from_model", required=True, choices=models.MODELS)
    p.add_argument("--to", dest="to_model", required=True, choices=models.MODELS)
    p.set_defaults(func=cmd_convert)

    def scene_args(p):
        p.add_argument("angles", type=float, nargs="*", help="vertex angles (degrees unless --radians)")
        p.add_argument("--scene", metavar="FILE", help="JSON scene file")

    p = add("hexagon", "analyse an ideal hexagon")
    scene_args(p)
    p.add_argument("--sizes", type=float, nargs=6, help="horodisk sizes at the vertices (default all 1)")
    p.set_defaults(func=cmd_hexagon)

    p = add("chain", "build a chain of six tangent horodisks and verify the Seven Circles Theorem")
    scene_args(p)
    p.add_argument("--s1", type=float, default=None, help="size of the first horodisk (default 1)")
    p.add_argument("--solve-closure", action="store_true", help="five angles given; solve for the sixth")
    p.add_argument("--arc", type=float, nargs=2, metavar=("LO", "HI"), help="search arc for the sixth angle")
    p.set_defaults(func=cmd_chain)

    p = add("sample", "random property batch for the hexagon theorems")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--mode", choices=("random", "symmetric"), default="random")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = add("render", "write an SVG figure")
    scene_args(p)
    p.add_argument("--layers", default=None,
                   help=f"comma list of {', '.join(LAYERS)} or presets {', '.join(PRESETS)}")
    p.add_argument("--kind", choices=("chain", "hexagon"), default="chain",
                   help="how to read command-line angles (default chain)")
    p.add_argument("--s1", type=float, default=None)
    p.add_argument("--sizes", type=float, nargs=6)
    p.add_argument("--solve-closure", action="store_true")
    p.add_argument("--arc", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--width", type=int, default=600, help="SVG width/height attribute in px")
    p.add_argument("--out", "-o", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NoRoot:
        print("error: closure residual does not cross 1 on the search arc", file=sys.stderr)
        return EXIT_NO_ROOT
    except (UsageError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
