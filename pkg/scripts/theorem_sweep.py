"""Seeded sweep of the hexagon theorems over many random configurations.

    python3 scripts/theorem_sweep.py --count 100000 --workers 4
"""

import argparse
from dataclasses import asdict, dataclass

from sevencircles.cli import run_sample


@dataclass(frozen=True)
class SweepConfig:
    count: int = 10_000
    seed: int = 1
    workers: int = 1
    modes: tuple[str, ...] = ("random", "symmetric")


def sweep(cfg: SweepConfig) -> list[dict]:
    return [run_sample(cfg.count, cfg.seed, mode, cfg.workers) for mode in cfg.modes]


def main() -> None:
    defaults = SweepConfig()
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--count", type=int, default=defaults.count)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--workers", type=int, default=defaults.workers)
    parser.add_argument("--modes", nargs="+", choices=("random", "symmetric"), default=list(defaults.modes))
    args = parser.parse_args()
    cfg = SweepConfig(args.count, args.seed, args.workers, tuple(args.modes))
    print("config:", asdict(cfg))
    for stats in sweep(cfg):
        print()
        for key, value in stats.items():
            print(f"{key:32s} {value}")


if __name__ == "__main__":
    main()
