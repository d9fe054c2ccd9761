"""Approximation ratios of the one-node-per-target planner against the exact optimum.

Prints the per-n distribution of length/optimum next to the worst-case factor
for that n.
"""

import argparse
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from coverage_planner.bounds import evaluate_bounds
from coverage_planner.free_planner import shortest_cover
from coverage_planner.instances import random_disjoint, trial_rng
from coverage_planner.oracle import exact_cover_p1, exact_st_tsp


@dataclass
class Config:
    trials: int = 200
    n_min: int = 4
    n_max: int = 7
    seed: int = 0
    r: float = 1.0
    spread: float = 3.0


def run(cfg: Config) -> dict:
    ratios = defaultdict(list)
    tsp_ratios = defaultdict(list)
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        n = int(rng.integers(cfg.n_min, cfg.n_max + 1))
        scn = random_disjoint(n, rng, cfg.r, cfg.spread)
        alg = shortest_cover(scn).length
        ratios[n].append(alg / exact_cover_p1(scn).value)
        tsp_ratios[n].append(alg / exact_st_tsp(scn.targets, scn.start, scn.end, positions=True).value)
    return {"cover": ratios, "tsp": tsp_ratios}


def main(cfg: Config) -> None:
    res = run(cfg)
    print(f"{'n':>3} {'trials':>6} {'mean':>8} {'max':>8} {'factor':>8} {'max vs TSP':>11}")
    for n in sorted(res["cover"]):
        rs = np.array(res["cover"][n])
        factor = evaluate_bounds(n, cfg.r, 1.0).prop1_factor
        print(f"{n:>3} {len(rs):>6} {rs.mean():>8.4f} {rs.max():>8.4f} {factor:>8.4f} {max(res['tsp'][n]):>11.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    main(Config(**vars(ap.parse_args())))
