"""Exact optimum on the alternating linear packing versus the closed-form packing length."""

import argparse
import time
from dataclasses import dataclass

from coverage_planner.bounds import kappa_and_path, worst_case_instance
from coverage_planner.oracle import exact_cover_p1, exact_st_tsp


@dataclass
class Config:
    sizes: tuple = (5, 7, 9)
    r: float = 1.0


def main(cfg: Config) -> None:
    print(f"{'n':>3} {'oracle':>14} {'P_odd':>14} {'rel gap':>10} {'l_TSP':>7} {'ratio':>8} {'sec':>6}")
    for n in cfg.sizes:
        scn = worst_case_instance(n, cfg.r)
        pp = kappa_and_path(n, cfg.r)
        t0 = time.perf_counter()
        opt = exact_cover_p1(scn)
        tsp = exact_st_tsp(scn.targets, scn.start, scn.end, positions=True).value
        sec = time.perf_counter() - t0
        gap = (opt.value - pp.p_odd) / pp.p_odd
        print(f"{n:>3} {opt.value:>14.10f} {pp.p_odd:>14.10f} {gap:>10.2e} {tsp:>7.3f} {tsp / opt.value:>8.4f} {sec:>6.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 7, 9])
    ap.add_argument("--r", type=float, default=1.0)
    a = ap.parse_args()
    main(Config(tuple(a.sizes), a.r))
