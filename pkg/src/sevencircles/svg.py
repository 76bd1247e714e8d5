"""SVG figures of chains, hexagons, diagonals and the small triangle.

The unit disk is drawn in a fixed 1000x1000 viewBox with the y axis pointing
up, so output for identical input is byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geodesics import Diameter, Geodesic
from .circles import Horodisk
from .hexagon import CircleChain, IdealHexagon, main_diagonals, small_triangle

LAYERS = ("circles", "vertices", "hexagon", "klein", "poincare", "triangle")
PRESETS = {
    "all": LAYERS,
    "figure2": ("circles", "vertices", "klein"),
    "figure3": ("circles", "vertices", "hexagon", "poincare"),
    "figure5": ("hexagon", "poincare", "triangle"),
}

SCALE = 500.0


@dataclass(frozen=True)
class RenderOptions:
    width: int = 600
    stroke: float = 2.0
    diagonal_stroke: float = 3.0
    layers: tuple[str, ...] = field(default=LAYERS)


def parse_layers(spec: str | list[str]) -> tuple[str, ...]:
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[str] = []
    for name in (n.strip() for n in names):
        if not name:
            continue
        if name in PRESETS:
            out.extend(PRESETS[name])
        elif name in LAYERS:
            out.append(name)
        else:
            raise ValueError(f"unknown layer {name!r}; choose from {LAYERS} or presets {tuple(PRESETS)}")
    return tuple(layer for layer in LAYERS if layer in out)


def _num(v: float) -> str:
    return f"{round(v, 3) + 0.0:.3f}"


def _xy(z: complex) -> str:
    return f"{_num(SCALE + SCALE * z.real)} {_num(SCALE - SCALE * z.imag)}"


def _center_attrs(z: complex) -> str:
    return f'cx="{_num(SCALE + SCALE * z.real)}" cy="{_num(SCALE - SCALE * z.imag)}"'


def _arc_to(carrier, z0: complex, z1: complex) -> str:
    """Path command continuing from ``z0`` to ``z1`` along a geodesic carrier."""
    if isinstance(carrier, Diameter):
        return f"L {_xy(z1)}"
    c = carrier.center
    cross = ((z0 - c).conjugate() * (z1 - c)).imag
    # counter-clockwise in the math frame is sweep-flag 0 once y is flipped
    sweep = 0 if cross > 0 else 1
    r = _num(SCALE * carrier.radius)
    return f"A {r} {r} 0 0 {sweep} {_xy(z1)}"


def _geodesic_path(G: Geodesic, cls: str, stroke: float, color: str) -> str:
    ua, ub = G.endpoints
    return (
        f'<path class="{cls}" d="M {_xy(ua)} {_arc_to(G.carrier, ua, ub)}" '
        f'fill="none" stroke="{color}" stroke-width="{stroke}"/>'
    )


def render_svg(
    hexagon: IdealHexagon,
    horodisks: tuple[Horodisk, ...] | None = None,
    options: RenderOptions = RenderOptions(),
) -> str:
    layers = set(options.layers)
    w = options.width
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" '
        'viewBox="0 0 1000 1000">',
        '<rect width="1000" height="1000" fill="white"/>',
        f'<circle class="unit-circle" cx="500.000" cy="500.000" r="500.000" fill="none" '
        f'stroke="black" stroke-width="{options.stroke}"/>',
    ]
    if "circles" in layers and horodisks:
        for h in horodisks:
            c = h.euclidean_center
            out.append(
                f'<circle class="horodisk" {_center_attrs(c)} r="{_num(SCALE * h.euclidean_radius)}" '
                f'fill="none" stroke="#1f77b4" stroke-width="{options.stroke}"/>'
            )
    if "hexagon" in layers:
        for k in range(6):
            out.append(_geodesic_path(Geodesic(hexagon[k], hexagon[k + 1]), "hexagon-side", options.stroke, "black"))
    diagonals = main_diagonals(hexagon)
    if "klein" in layers:
        for G in diagonals:
            ua, ub = G.endpoints
            out.append(
                f'<line class="klein-diagonal" x1="{_num(SCALE + SCALE * ua.real)}" '
                f'y1="{_num(SCALE - SCALE * ua.imag)}" x2="{_num(SCALE + SCALE * ub.real)}" '
                f'y2="{_num(SCALE - SCALE * ub.imag)}" stroke="#d62728" '
                f'stroke-width="{options.diagonal_stroke}"/>'
            )
    if "poincare" in layers:
        for G in diagonals:
            out.append(_geodesic_path(G, "poincare-diagonal", options.diagonal_stroke, "#2ca02c"))
    if "triangle" in layers:
        T = small_triangle(hexagon)
        if T.degenerate:
            out.append(f'<circle class="triple-point" {_center_attrs(T.q1)} r="8.000" fill="#d62728"/>')
        else:
            # q1q2 lies on diagonal 1, q2q3 on diagonal 3, q3q1 on diagonal 2
            d1, d2, d3 = (G.carrier for G in diagonals)
            path = (
                f"M {_xy(T.q1)} {_arc_to(d1, T.q1, T.q2)} {_arc_to(d3, T.q2, T.q3)} "
                f"{_arc_to(d2, T.q3, T.q1)} Z"
            )
            out.append(
                f'<path class="small-triangle" d="{path}" fill="#d62728" fill-opacity="0.5" '
                f'stroke="#d62728" stroke-width="{options.stroke}"/>'
            )
    if "vertices" in layers:
        for v in hexagon:
            out.append(f'<circle class="ideal-vertex" {_center_attrs(v.u)} r="6.000" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_chain(chain: CircleChain, options: RenderOptions = RenderOptions()) -> str:
    return render_svg(IdealHexagon(chain.bases), chain.horodisks, options)

