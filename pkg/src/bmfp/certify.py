"""Exhaustive pairwise certification of the two contraction conditions.

``basic`` checks J(theta(d(Sx, Sy)), theta(d(x, y))) >= c on every ordered
pair with d(Sx, Sy) > 0. ``generalized`` replaces d(x, y) by the four-term
maximum computed in :func:`compute_ms`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .functions import FunctionSuite
from .space import FiniteBMetricSpace, SelfMap, SpaceError

MARGIN_TOL = 1e-9


class InconsistentMapError(SpaceError):
    pass


@dataclass(frozen=True)
class PairRecord:
    x: str
    y: str
    image_distance: float
    argument_distance: float
    j_value: float
    margin: float

    @property
    def pair(self) -> tuple[str, str]:
        return (self.x, self.y)

    def to_dict(self) -> dict:
        return {
            "pair": [self.x, self.y],
            "image_distance": self.image_distance,
            "argument_distance": self.argument_distance,
            "j_value": self.j_value,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class ContractionCertificate:
    condition: str  # "basic" | "generalized"
    c: float
    tolerance: float
    records: tuple[PairRecord, ...]
    points: tuple[str, ...]
    images: tuple[str, ...]
    distances: tuple[tuple[float, ...], ...]
    coefficient: float

    @property
    def witnesses(self) -> tuple[PairRecord, ...]:
        return tuple(r for r in self.records if r.margin < -self.tolerance)

    @property
    def certified(self) -> bool:
        return not self.witnesses

    @property
    def verdict(self) -> str:
        return "certified" if self.certified else "not certified"

    @property
    def min_margin(self) -> float | None:
        return min((r.margin for r in self.records), default=None)

    @property
    def min_j_value(self) -> float | None:
        return min((r.j_value for r in self.records), default=None)

    def matches(self, space: FiniteBMetricSpace, smap: SelfMap) -> bool:
        return (self.points == space.points and self.images == smap.images
                and self.distances == space.distances and self.coefficient == space.coefficient)

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "verdict": self.verdict,
            "c": self.c,
            "tolerance": self.tolerance,
            "qualifying_pairs": len(self.records),
            "min_margin": self.min_margin,
            "min_j_value": self.min_j_value,
            "witnesses": [list(r.pair) for r in self.witnesses],
            "records": [r.to_dict() for r in self.records],
        }


def compute_ms(space: FiniteBMetricSpace, smap: SelfMap, x: str, y: str) -> float:
    """max{d(x,y), d(x,Sx), d(y,Sy), (d(Sx,y) + d(x,Sy)) / 2s} with the declared s."""
    d = space.d
    sx, sy = smap(x), smap(y)
    return max(d(x, y), d(x, sx), d(y, sy), (d(sx, y) + d(x, sy)) / (2.0 * space.coefficient))


def _certify(condition: str, space: FiniteBMetricSpace, smap: SelfMap,
             suite: FunctionSuite, tol: float) -> ContractionCertificate:
    if smap.points != space.points:
        raise SpaceError("map and space have different points")
    records = []
    for x in space.points:
        sx = smap(x)
        for y in space.points:
            sy = smap(y)
            img = space.d(sx, sy)
            if img <= 0.0:
                continue
            arg = space.d(x, y) if condition == "basic" else compute_ms(space, smap, x, y)
            if arg <= 0.0:
                raise InconsistentMapError(
                    f"d({x}, {y}) = 0 but d(S{x}, S{y}) = {img!r} > 0; the map is not well defined")
            jv = suite.j_value(img, arg)
            if not math.isfinite(jv):
                raise ValueError(f"non-finite J value at ({x}, {y})")
            records.append(PairRecord(x, y, img, arg, jv, jv - suite.c))
    return ContractionCertificate(condition, suite.c, tol, tuple(records), space.points, smap.images,
                                  space.distances, space.coefficient)


def certify_basic(space: FiniteBMetricSpace, smap: SelfMap, suite: FunctionSuite,
                  tol: float = MARGIN_TOL) -> ContractionCertificate:
    return _certify("basic", space, smap, suite, tol)


def certify_generalized(space: FiniteBMetricSpace, smap: SelfMap, suite: FunctionSuite,
                        tol: float = MARGIN_TOL) -> ContractionCertificate:
    return _certify("generalized", space, smap, suite, tol)


def certify(space, smap, suite, theorem: str = "basic", tol: float = MARGIN_TOL) -> ContractionCertificate:
    if theorem not in ("basic", "generalized"):
        raise ValueError(f"unknown theorem selector {theorem!r}")
    return _certify(theorem, space, smap, suite, tol)
