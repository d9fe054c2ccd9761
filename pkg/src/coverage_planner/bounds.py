"""Closed-form constants and path-length bounds for the coverage planners."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from scipy.optimize import brentq

from .errors import DomainError
from .scenario import Scenario

SQRT3 = math.sqrt(3.0)


def _theta_residual(theta: float) -> float:
    return math.tan(2.0 * theta) * (1.0 + math.sin(theta)) - (SQRT3 - math.cos(theta))


def solve_theta_star_odd() -> float:
    """Root on (0, pi/4) of tan(2t)(1 + sin t) = sqrt(3) - cos t.

    The residual is negative at 0 and diverges to +inf at pi/4, so the bracket is safe.
    """
    hi = math.pi / 4.0 - 1e-9
    return brentq(_theta_residual, 0.0, hi, xtol=1e-15, maxiter=200)


def kappa_odd(theta: float | None = None) -> float:
    th = solve_theta_star_odd() if theta is None else theta
    return 2.0 * math.hypot(1.0 + math.sin(th), SQRT3 - math.cos(th)) - 2.0 * math.sin(th)


@dataclass(frozen=True)
class PackingPath:
    kappa: float
    p_odd: float
    l_tsp: float
    ratio: float


def kappa_and_path(n: int, r: float) -> PackingPath:
    """Shortest cover length n - 4 + kappa (times r) of the alternating packing, with the TSP ratio."""
    if n <= 4:
        raise DomainError(f"packing path formula needs n > 4, got {n}")
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r}")
    k = kappa_odd()
    p = r * (n - 4 + k)
    l_tsp = 2.0 * (n - 1) * r
    return PackingPath(k, p, l_tsp, l_tsp / p)


def delta(n: int) -> float:
    """Slack (4 - kappa) / (n - 4 + kappa); the packing path needs n > 4 but the ratio is finite from n = 4."""
    if n < 4:
        raise DomainError(f"delta(n) needs n >= 4, got {n}")
    k = kappa_odd()
    return (4.0 - k) / (n - 4 + k)


def worst_case_instance(n: int, r: float = 1.0) -> Scenario:
    """Tangent circles alternating between y = 0 and y = sqrt(3) r, spaced r apart in x."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    pts = tuple((k * r, 0.0 if k % 2 == 0 else SQRT3 * r) for k in range(n))
    return Scenario(pts, r)


@dataclass(frozen=True)
class BoundReport:
    n: int
    r: float
    l_opt: float
    m: int
    rho_bar: float
    theta_star: float
    kappa_odd: float
    delta_n: float
    prop1_factor: float
    prop1_bound: float
    prop2_bound: float
    prop3_bound: float
    prop3_constant: float

    def as_dict(self) -> dict:
        return asdict(self)


def prop2_bound(l_opt: float, r: float) -> float:
    return (5.0 / 3.0) * (9.0 * l_opt + (1.0 + 8.0 * math.pi) * r)


def prop3_bound(l_opt: float, r: float, m: int, rho_bar: float) -> tuple[float, float]:
    """Bound on the obstacle planner's length and its additive constant."""
    if not (0.0 < rho_bar <= r * (1.0 + 1e-12)):
        raise DomainError(f"rho_bar must lie in (0, r], got {rho_bar}")
    q = 8.0 * r * r / (rho_bar * rho_bar)
    c = ((5.0 / 3.0) * q * math.pi + 2.0) * r
    return (5.0 / 3.0) * ((1.0 + q) * l_opt + 2.0 * r * m) + c, c


def evaluate_bounds(n: int, r: float, l_opt: float, m: int = 0, rho_bar: float | None = None) -> BoundReport:
    if l_opt < 0.0:
        raise DomainError(f"l_opt must be non-negative, got {l_opt}")
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r}")
    rho = r if rho_bar is None else float(rho_bar)
    th = solve_theta_star_odd()
    k = kappa_odd(th)
    d = (4.0 - k) / (n - 4 + k) if n >= 4 else math.nan
    f1 = (10.0 / 3.0) * (1.0 + d)
    p3, c = prop3_bound(l_opt, r, m, rho)
    return BoundReport(
        n=n, r=r, l_opt=l_opt, m=m, rho_bar=rho,
        theta_star=th, kappa_odd=k, delta_n=d,
        prop1_factor=f1, prop1_bound=f1 * l_opt,
        prop2_bound=prop2_bound(l_opt, r), prop3_bound=p3, prop3_constant=c,
    )
