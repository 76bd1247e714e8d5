"""Regenerate the golden files under tests/data/golden from the CLI.

Run after an intentional change to the report or SVG format, then review the diff.
"""

import contextlib
import io
import os
import sys

from sevencircles.cli import main

ROOT = os.path.join(os.path.dirname(__file__), "..", "tests", "data")
GOLDEN = os.path.join(ROOT, "golden")
REGULAR = ["0", "60", "120", "180", "240", "300"]

RENDERS = {
    "regular_chain.svg": REGULAR,
    "regular_chain_klein.svg": [*REGULAR, "--layers", "klein"],
    "regular_chain_poincare.svg": [*REGULAR, "--layers", "poincare"],
}
REPORTS = {
    "worked_hexagon.txt": ["hexagon", "0", "60", "120", "180", "240", "330"],
}


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    if code:
        sys.exit(f"{argv} exited with {code}")
    return out.getvalue()


if __name__ == "__main__":
    os.makedirs(GOLDEN, exist_ok=True)
    for name, argv in RENDERS.items():
        run(["render", *argv, "-o", os.path.join(GOLDEN, name)])
    for name, argv in REPORTS.items():
        with open(os.path.join(GOLDEN, name), "w", newline="\n") as fh:
            fh.write(run(argv))
    print("wrote", ", ".join([*RENDERS, *REPORTS]))
