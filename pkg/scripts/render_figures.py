"""Write the three standard figures as SVG files.

figure2: a closed chain of six horodisks with straight Klein diagonals.
figure3: the same chain with Poincare geodesic diagonals.
figure5: a hexagon whose diagonals cut out a visible small triangle.
"""

import argparse
import math
import os
from dataclasses import dataclass, field

from sevencircles.circles import Horodisk
from sevencircles.hexagon import IdealHexagon, build_tangent_chain, solve_closure
from sevencircles.svg import RenderOptions, parse_layers, render_svg


@dataclass(frozen=True)
class FigureConfig:
    chain_prefix_deg: tuple[float, ...] = (0, 40, 110, 170, 250)
    s1: float = 0.5
    hexagon_deg: tuple[float, ...] = (0, 60, 120, 180, 240, 330)
    width: int = 600
    out_dir: str = "figures"
    names: tuple[str, ...] = field(default=("figure2", "figure3", "figure5"))


def render_all(cfg: FigureConfig) -> list[str]:
    five = [math.radians(t) for t in cfg.chain_prefix_deg]
    chain = build_tangent_chain([*five, solve_closure(five, cfg.s1)], cfg.s1)
    chain_hex = IdealHexagon(chain.bases)
    P = IdealHexagon.from_degrees(cfg.hexagon_deg)
    plain = tuple(Horodisk(v, 1.0) for v in P)
    os.makedirs(cfg.out_dir, exist_ok=True)
    written = []
    for name in cfg.names:
        opts = RenderOptions(width=cfg.width, layers=parse_layers(name))
        if name == "figure5":
            svg = render_svg(P, plain, opts)
        else:
            svg = render_svg(chain_hex, chain.horodisks, opts)
        path = os.path.join(cfg.out_dir, f"{name}.svg")
        with open(path, "w", newline="\n") as fh:
            fh.write(svg)
        written.append(path)
    return written


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out-dir", default=FigureConfig.out_dir)
    parser.add_argument("--width", type=int, default=FigureConfig.width)
    args = parser.parse_args()
    for path in render_all(FigureConfig(width=args.width, out_dir=args.out_dir)):
        print(path)


if __name__ == "__main__":
    main()
