"""Scenario files, plan reports and SVG drawings."""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

from .errors import InvalidInputError
from .geometry import Polygon, signed_area
from .scenario import CoveragePlan, Scenario

SCENARIO_KEYS = {"targets", "r", "start_index", "end_index", "obstacles", "seed"}


class ScenarioFormatError(InvalidInputError):
    """The document is not a well-formed scenario description."""


def _number(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ScenarioFormatError(f"malformed scenario: {what} must be a number, got {v!r}")
    return float(v)


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ScenarioFormatError(f"malformed scenario: {what} must be an integer, got {v!r}")
    return v


def _point_list(v, what: str) -> list[tuple[float, float]]:
    if not isinstance(v, list):
        raise ScenarioFormatError(f"malformed scenario: {what} must be an array of [x, y] pairs")
    out = []
    for k, p in enumerate(v):
        if not isinstance(p, list) or len(p) != 2:
            raise ScenarioFormatError(f"malformed scenario: {what}[{k}] must be an [x, y] pair, got {p!r}")
        out.append((_number(p[0], f"{what}[{k}][0]"), _number(p[1], f"{what}[{k}][1]")))
    return out


def parse_scenario(document: Union[str, bytes, Mapping]) -> Scenario:
    """Validated Scenario from a JSON document (text or already-decoded mapping)."""
    if isinstance(document, (str, bytes)):
        try:
            data = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ScenarioFormatError(f"malformed scenario: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    else:
        data = document
    if not isinstance(data, Mapping):
        raise ScenarioFormatError("malformed scenario: top level must be an object")
    unknown = sorted(set(data) - SCENARIO_KEYS)
    if unknown:
        raise ScenarioFormatError(f"malformed scenario: unknown keys {unknown}")
    for key in ("targets", "r"):
        if key not in data:
            raise ScenarioFormatError(f"malformed scenario: missing required key {key!r}")
    targets = _point_list(data["targets"], "targets")
    if len(targets) < 2:
        raise InvalidInputError(f"at least 2 targets are required, got {len(targets)}")
    r = _number(data["r"], "r")
    if not r > 0.0:
        raise InvalidInputError(f"sensing radius r must be positive, got {r}")
    start = _int(data.get("start_index", 0), "start_index")
    end = _int(data.get("end_index", len(targets) - 1), "end_index")
    seed = data.get("seed")
    if seed is not None:
        seed = _int(seed, "seed")
    raw_obs = data.get("obstacles", [])
    if not isinstance(raw_obs, list):
        raise ScenarioFormatError("malformed scenario: obstacles must be an array of polygons")
    obstacles = []
    for k, o in enumerate(raw_obs):
        pts = _point_list(o, f"obstacles[{k}]")
        if len(pts) >= 3 and signed_area(pts) < 0.0:
            warnings.warn(f"obstacle {k} is clockwise; reoriented to counterclockwise", UserWarning, stacklevel=2)
            pts.reverse()
        obstacles.append(Polygon(tuple(pts)))
    return Scenario(tuple(targets), r, start, end, tuple(obstacles), seed)


def load_scenario(path: Union[str, Path]) -> Scenario:
    return parse_scenario(Path(path).read_text())


def scenario_to_dict(scn: Scenario) -> dict:
    out: dict[str, Any] = {
        "targets": [[p.x, p.y] for p in scn.targets],
        "r": scn.r,
        "start_index": scn.start,
        "end_index": scn.end,
    }
    if scn.obstacles:
        out["obstacles"] = [[[v.x, v.y] for v in o.vertices] for o in scn.obstacles]
    if scn.seed is not None:
        out["seed"] = scn.seed
    return out


def dump_scenario(scn: Scenario) -> str:
    return json.dumps(scenario_to_dict(scn), indent=2)


# --------------------------------------------------------------------------
# reports


def _plain(x):
    """JSON-ready copy: tuples and points become lists, numpy scalars become floats."""
    if isinstance(x, Mapping):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item") and not isinstance(x, (str, bytes)):
        return x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


@dataclass
class PlanReport:
    problem: int
    length: float
    node_count: int
    order: list
    nodes: list
    path: list
    assignment: dict
    bounds: Optional[dict] = None
    oracle: Optional[dict] = None
    timing: dict = field(default_factory=dict)

    @classmethod
    def from_plan(cls, problem: int, plan: CoveragePlan, **extra) -> "PlanReport":
        return cls(
            problem=problem,
            length=float(plan.length),
            node_count=plan.node_count,
            order=[int(k) for k in plan.order],
            nodes=[[float(p[0]), float(p[1])] for p in plan.nodes],
            path=[[float(p[0]), float(p[1])] for p in plan.path],
            assignment={str(k): int(v) for k, v in sorted(plan.assignment.items())},
            **extra,
        )

    def to_dict(self, timing: bool = True) -> dict:
        d = _plain(asdict(self))
        if not timing:
            d.pop("timing")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PlanReport":
        return cls(**json.loads(text))


def to_json(obj: Any) -> str:
    if hasattr(obj, "__dataclass_fields__"):
        obj = asdict(obj)
    return json.dumps(_plain(obj), indent=2, sort_keys=True)


# --------------------------------------------------------------------------
# SVG


def _f(v: float) -> str:
    s = f"{round(v, 6):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(
    scn: Scenario,
    plan: Optional[CoveragePlan] = None,
    regions: Optional[Sequence] = None,
    *,
    width: int = 800,
) -> str:
    """SVG drawing: sensing circles and viewing regions red, obstacles grey, path black, nodes blue.

    The drawing has exactly one <path> (the plan path, if any) and one <circle>
    per target; nodes are drawn as small squares.
    """
    xs = [p.x for p in scn.targets] + [v.x for o in scn.obstacles for v in o.vertices]
    ys = [p.y for p in scn.targets] + [v.y for o in scn.obstacles for v in o.vertices]
    if plan is not None:
        xs += [p[0] for p in plan.path]
        ys += [p[1] for p in plan.path]
    pad = scn.r * 1.1
    x0, y0, x1, y1 = min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad
    w, h = x1 - x0, y1 - y0
    height = max(1, int(round(width * h / w)))
    unit = w / width
    # flip y so the drawing reads like a plot
    tf = f"matrix(1 0 0 -1 0 {_f(y0 + y1)})"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(h)}">',
        f'<g transform="{tf}">',
    ]
    for o in scn.obstacles:
        pts = " ".join(f"{_f(v.x)},{_f(v.y)}" for v in o.vertices)
        out.append(f'<polygon class="obstacle" points="{pts}" fill="#999999" stroke="#555555" stroke-width="{_f(unit)}"/>')
    if regions is not None:
        for reg in regions:
            pts = " ".join(f"{_f(p.x)},{_f(p.y)}" for p in reg.outline(chord_tol=unit * 0.25))
            out.append(f'<polygon class="region" points="{pts}" fill="red" fill-opacity="0.08" stroke="red" stroke-width="{_f(unit)}"/>')
    for t in scn.targets:
        out.append(
            f'<circle cx="{_f(t.x)}" cy="{_f(t.y)}" r="{_f(scn.r)}" fill="none" stroke="red" stroke-width="{_f(unit)}"/>'
        )
    if plan is not None and plan.path:
        p0, rest = plan.path[0], plan.path[1:]
        d = f"M {_f(p0[0])} {_f(p0[1])}" + "".join(f" L {_f(p[0])} {_f(p[1])}" for p in rest)
        out.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="{_f(2 * unit)}"/>')
        s = 6 * unit
        for p in plan.nodes:
            out.append(f'<rect class="node" x="{_f(p[0] - s / 2)}" y="{_f(p[1] - s / 2)}" width="{_f(s)}" height="{_f(s)}" fill="blue"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
