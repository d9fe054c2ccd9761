"""Command line: plan, oracle, bounds, bench and render.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import os
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .bounds import evaluate_bounds, kappa_and_path
from .errors import CapacityError, InvalidInputError
from .free_planner import interiors_overlap, reduced_sensing_path, shortest_cover
from .instances import random_disjoint, trial_rng
from .io import PlanReport, load_scenario, render_svg, to_json
from .obstacle_planner import plan_with_obstacles, viewing_regions
from .oracle import exact_cover_p1, exact_st_tsp
from .scenario import CoveragePlan, Scenario

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def thread_count() -> int:
    raw = os.environ.get("COVERAGE_PLANNER_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"COVERAGE_PLANNER_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def plan_scenario(scn: Scenario, problem: int) -> CoveragePlan:
    if problem in (1, 2) and scn.obstacles:
        raise InvalidInputError(f"problem {problem} is obstacle-free; use --problem 3 for scenarios with obstacles")
    if problem == 1:
        return shortest_cover(scn)
    if problem == 2:
        return reduced_sensing_path(scn)
    if problem == 3:
        return plan_with_obstacles(scn)
    raise UsageError(f"unknown problem {problem}")


def _has_overlap(scn: Scenario) -> bool:
    t = scn.targets
    return any(interiors_overlap(t[i], t[j], scn.r) for i in range(scn.n) for j in range(i + 1, scn.n))


def _oracle_dict(scn: Scenario) -> dict:
    relaxed = _has_overlap(scn) or bool(scn.obstacles)
    res = exact_cover_p1(scn.without_obstacles(), allow_overlap=True)
    tsp = exact_st_tsp(scn.targets, scn.start, scn.end, positions=True)
    return {
        "cover_length": res.value,
        "cover_order": list(res.structure),
        "cover_is_relaxation": relaxed,
        "orders_completed": res.enumerated,
        "tsp_length": tsp.value,
        "tsp_order": list(tsp.structure),
        "wall_time": res.wall_time + tsp.wall_time,
    }


def _cmd_plan(args) -> str:
    scn = load_scenario(args.file)
    t0 = time.perf_counter()
    plan = plan_scenario(scn, args.problem)
    elapsed = time.perf_counter() - t0
    extra = {"timing": {"plan_seconds": elapsed}}
    if args.with_oracle:
        orc = _oracle_dict(scn)
        timing = extra["timing"]
        timing["oracle_seconds"] = orc.pop("wall_time")
        extra["oracle"] = orc
        m = plan.info.get("obstacle_vertices", 0)
        rho = plan.info.get("rho_bar", scn.r)
        extra["bounds"] = evaluate_bounds(scn.n, scn.r, orc["cover_length"], m, min(rho, scn.r)).as_dict()
    report = PlanReport.from_plan(args.problem, plan, **extra)
    return report.to_json(timing=not args.no_timing)


def _cmd_oracle(args) -> str:
    scn = load_scenario(args.file)
    d = _oracle_dict(scn)
    if args.no_timing:
        d.pop("wall_time")
    return to_json(d)


def _cmd_bounds(args) -> str:
    l_opt = args.l_opt
    if l_opt is None:
        l_opt = kappa_and_path(args.n, args.r).p_odd if args.n > 4 else 0.0
    rep = evaluate_bounds(args.n, args.r, l_opt, args.m, args.rho_bar)
    return to_json(rep)


def _bench_trial(job: tuple[int, int, int, float]) -> tuple:
    trial, n, seed, r = job
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        scn = random_disjoint(n, trial_rng(seed, trial), r)
        alg = shortest_cover(scn).length
        orc = exact_cover_p1(scn).value
    factor = evaluate_bounds(n, r, orc).prop1_factor if n >= 4 else float("nan")
    return trial, n, alg, orc, alg / orc if orc > 0 else float("nan"), factor


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"--n-range must look like A..B, got {text!r}") from None
    if not 2 <= a <= b:
        raise UsageError(f"--n-range needs 2 <= A <= B, got {text!r}")
    return a, b


def _cmd_bench(args) -> str:
    lo, hi = _parse_range(args.n_range)
    if hi > 9:
        raise CapacityError(f"bench runs the exact oracle, which handles n <= 9 (got {hi})")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    nr = np.random.default_rng(args.seed)
    jobs = [(k, int(nr.integers(lo, hi + 1)), args.seed, args.r) for k in range(args.trials)]
    workers = min(thread_count(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_bench_trial, jobs))
    else:
        rows = [_bench_trial(j) for j in jobs]
    rows.sort()
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trial", "n", "alg_length", "oracle_length", "ratio", "prop1_factor"])
    for row in rows:
        w.writerow([row[0], row[1]] + [repr(float(v)) for v in row[2:]])
    return buf.getvalue().rstrip("\n")


def _cmd_render(args) -> str:
    scn = load_scenario(args.file)
    problem = args.problem if args.problem is not None else (3 if scn.obstacles else 2)
    plan = plan_scenario(scn, problem)
    regions = viewing_regions(scn) if scn.obstacles else None
    svg = render_svg(scn, plan, regions)
    Path(args.out).write_text(svg)
    return f"wrote {args.out}"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coverage-planner", description="Coverage path planning for observing point targets.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("plan", help="plan a coverage path for a scenario file")
    sp.add_argument("--problem", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--with-oracle", action="store_true", help="also run the exact oracle and evaluate bounds")
    sp.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_plan)

    so = sub.add_parser("oracle", help="exact optimum (one node per target) and exact TSP path")
    so.add_argument("--no-timing", action="store_true")
    so.add_argument("file")
    so.set_defaults(func=_cmd_oracle)

    sb = sub.add_parser("bounds", help="constants and path-length bounds")
    sb.add_argument("--n", type=int, required=True)
    sb.add_argument("--r", type=float, required=True)
    sb.add_argument("--l-opt", type=float, default=None, help="optimal length (default: packing length for n > 4)")
    sb.add_argument("--m", type=int, default=0, help="number of obstacle vertices")
    sb.add_argument("--rho-bar", type=float, default=None, help="equivalent radius of the base regions (default r)")
    sb.set_defaults(func=_cmd_bounds)

    sc = sub.add_parser("bench", help="heuristic vs exact ratio on random disjoint-circle instances")
    sc.add_argument("--trials", type=int, required=True)
    sc.add_argument("--n-range", required=True)
    sc.add_argument("--seed", type=int, required=True)
    sc.add_argument("--r", type=float, default=1.0)
    sc.set_defaults(func=_cmd_bench)

    sr = sub.add_parser("render", help="draw a plan as SVG")
    sr.add_argument("file")
    sr.add_argument("--out", required=True)
    sr.add_argument("--problem", type=int, choices=(1, 2, 3), default=None)
    sr.set_defaults(func=_cmd_render)
    return p


def run_command(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(list(argv))
        text = args.func(args)
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=stderr)
        return EXIT_CAPACITY
    except (InvalidInputError, ValueError) as exc:
        print(f"invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"cannot read or write file: {exc}", file=stderr)
        return EXIT_INVALID
    print(text, file=stdout)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
