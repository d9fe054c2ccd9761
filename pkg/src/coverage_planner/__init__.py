"""Coverage path planning: short robot paths from which every target is observed."""

from .bounds import BoundReport, delta, evaluate_bounds, kappa_and_path, solve_theta_star_odd, worst_case_instance
from .convex_path import Disk, FixedPoint, Segment, ViaSequence, optimize_sequence, solve_node_subproblem
from .errors import CapacityError, DomainError, InternalInvariantError, InvalidInputError, PlannerError, PreconditionError
from .free_planner import base_set_circles, initial_sensing_nodes, reduced_sensing_path, shortest_cover
from .geometry import Point2, Polygon, SensingCircle, ViewingRegion, regions_disjoint, visibility_region
from .hoogeveen import VisitationOrder, hoogeveen_order
from .io import PlanReport, dump_scenario, parse_scenario, render_svg
from .node_reduction import OverlapInterval, overlap_intervals, reduce_nodes
from .obstacle_planner import build_corridors, plan_with_obstacles, viewing_regions, visibility_metric
from .oracle import OracleResult, exact_cover_p1, exact_st_tsp, optimal_interval_piercing, subtour_constraint_count
from .scenario import CoveragePlan, Scenario, covers_all

__all__ = [
    "BoundReport", "CapacityError", "CoveragePlan", "Disk", "DomainError", "FixedPoint",
    "InternalInvariantError", "InvalidInputError", "OracleResult", "OverlapInterval", "PlanReport",
    "PlannerError", "Point2", "Polygon", "PreconditionError", "Scenario", "Segment", "SensingCircle",
    "ViaSequence", "ViewingRegion", "VisitationOrder",
    "base_set_circles", "build_corridors", "covers_all", "delta", "dump_scenario", "evaluate_bounds",
    "exact_cover_p1", "exact_st_tsp", "hoogeveen_order", "initial_sensing_nodes", "kappa_and_path",
    "optimal_interval_piercing", "optimize_sequence", "overlap_intervals", "parse_scenario",
    "plan_with_obstacles", "reduce_nodes", "reduced_sensing_path", "regions_disjoint", "render_svg",
    "shortest_cover", "solve_node_subproblem", "solve_theta_star_odd", "subtour_constraint_count",
    "viewing_regions", "visibility_metric", "visibility_region", "worst_case_instance",
]
