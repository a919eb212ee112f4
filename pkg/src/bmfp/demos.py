"""The two worked 4-point examples, embedded, and the full pipeline run on them.

Both use points 1..4, the map 1, 2, 3 -> 3 and 4 -> 1, theta(x) = x + 1,
F_c(x, y) = x / y with c = 1 and J(x, y) = y / (k x) with k = s.
Example A has d(1, 4) = 4 and s = sqrt(3); example B has d(1, 4) = 15 and s = 3.
"""

from __future__ import annotations

import math

from .certify import certify_basic, certify_generalized
from .engine import check_b_continuity, check_theorem_consequence, enumerate_fixed_points, picard_iterate
from .functions import FunctionSuite, builtin_suite, scaled_ratio_membership
from .space import FiniteBMetricSpace, SelfMap, argmax_coefficient, build_map, build_space, validate_axioms

POINTS = ["1", "2", "3", "4"]
MAP_TABLE = {"1": "3", "2": "3", "3": "3", "4": "1"}


def _table(d14: float) -> list[list[float]]:
    return [
        [0, 3, 1, d14],
        [3, 0, 1, 4],
        [1, 1, 0, 4],
        [d14, 4, 4, 0],
    ]


def example_a() -> tuple[FiniteBMetricSpace, SelfMap, FunctionSuite]:
    s = math.sqrt(3)
    space = build_space(POINTS, _table(4), s)
    return space, build_map(space, MAP_TABLE), builtin_suite(s)


def example_b() -> tuple[FiniteBMetricSpace, SelfMap, FunctionSuite]:
    space = build_space(POINTS, _table(15), 3.0)
    return space, build_map(space, MAP_TABLE), builtin_suite(3.0)


EXAMPLES = {"A": example_a, "B": example_b}


def run_demo(selector: str) -> dict:
    """Validate, check membership, certify, iterate and cross-check one example.

    A goes through the basic condition only. B shows the basic condition
    failing and the generalized one holding.
    """
    key = selector.upper()
    if key not in EXAMPLES:
        raise ValueError(f"unknown example {selector!r}; choose A or B")
    space, smap, suite = EXAMPLES[key]()
    validation = validate_axioms(space.distances, space.coefficient)
    triple = argmax_coefficient(space.distances)
    member = scaled_ratio_membership(suite.j.k, space.coefficient)

    certs = [certify_basic(space, smap, suite)]
    if key == "B":
        certs.append(certify_generalized(space, smap, suite))
    deciding = certs[-1]

    trajectories = [picard_iterate(space, smap, p) for p in space.points]
    fixed = enumerate_fixed_points(space, smap, deciding)
    consequence = check_theorem_consequence(space, smap, deciding)
    continuity = check_b_continuity(space, smap)
    claim_holds = (
        validation.passed
        and member.member
        and deciding.certified
        and consequence.passed
        and (key == "A" or not certs[0].certified)
    )
    return {
        "example": key,
        "space": {
            "points": list(space.points),
            "declared_coefficient": space.coefficient,
            "minimal_coefficient": space.minimal_coefficient,
            "minimal_attained_at": None if triple is None else [space.points[i] for i in triple],
            "validation": validation.to_dict(space.points),
        },
        "map": smap.table,
        "suite": suite.to_dict(),
        "membership": {"k": suite.j.k, "s": space.coefficient, "member": member.member,
                       "justification": member.justification},
        "certificates": [c.to_dict() for c in certs],
        "b_continuity": {"continuous": continuity.continuous, "justification": continuity.justification},
        "trajectories": [t.to_dict() for t in trajectories],
        "fixed_points": fixed.to_dict(),
        "consequence": consequence.to_dict(),
        "claim_holds": claim_holds,
    }
