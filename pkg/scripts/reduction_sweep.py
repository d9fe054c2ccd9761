"""Sensing nodes needed along a line of equally spaced targets as the sensing radius grows."""

import argparse
from dataclasses import dataclass

import numpy as np

from coverage_planner.free_planner import reduced_sensing_path
from coverage_planner.scenario import Scenario, covers_all


@dataclass
class Config:
    targets: int = 18
    spacing: float = 1.0
    r_min: float = 0.6
    r_max: float = 3.0
    steps: int = 13


def main(cfg: Config) -> None:
    print(f"{'r':>6} {'nodes':>6} {'length':>9}")
    for r in np.linspace(cfg.r_min, cfg.r_max, cfg.steps):
        scn = Scenario(tuple((k * cfg.spacing, 0.0) for k in range(cfg.targets)), float(r))
        plan = reduced_sensing_path(scn)
        assert covers_all(plan, scn)
        print(f"{r:>6.3f} {plan.node_count:>6d} {plan.length:>9.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    main(Config(**vars(ap.parse_args())))
