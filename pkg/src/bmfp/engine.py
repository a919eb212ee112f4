"""Picard iteration on finite spaces, fixed-point enumeration, theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .certify import ContractionCertificate
from .space import FiniteBMetricSpace, SelfMap, SpaceError


class IterationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class FixedPoint:
    point: str
    step: int

    def to_dict(self) -> dict:
        return {"kind": "fixed_point", "point": self.point, "step": self.step}


@dataclass(frozen=True)
class Cycle:
    period: int
    entry: int

    def to_dict(self) -> dict:
        return {"kind": "cycle", "period": self.period, "entry": self.entry}


@dataclass(frozen=True)
class Trajectory:
    seed: str
    visited: tuple[str, ...]
    step_distances: tuple[float, ...]
    outcome: FixedPoint | Cycle

    def steps_strictly_decreasing(self) -> bool:
        """r_n strictly decreases until it reaches 0 (and stays there)."""
        r = self.step_distances
        for a, b in zip(r, r[1:]):
            if a == 0.0:
                if b != 0.0:
                    return False
            elif not b < a:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "visited": list(self.visited),
            "step_distances": list(self.step_distances),
            "outcome": self.outcome.to_dict(),
        }


def picard_iterate(space: FiniteBMetricSpace, smap: SelfMap, seed: str,
                   max_steps: int | None = None) -> Trajectory:
    """Iterate a_{n+1} = S a_n from ``seed`` until a point repeats.

    ``visited`` stops before the first repeat; ``step_distances[n]`` is
    d(a_n, a_{n+1}) for every visited a_n, so the last entry is 0 exactly
    when the orbit ends in a fixed point.
    """
    space.index(seed)
    if max_steps is None:
        max_steps = len(space) + 1
    visited = [seed]
    pos = {seed: 0}
    steps = []
    cur = seed
    for _ in range(max_steps):
        nxt = smap(cur)
        steps.append(space.d(cur, nxt))
        if nxt in pos:
            entry = pos[nxt]
            period = len(visited) - entry
            if period == 1:
                outcome = FixedPoint(nxt, entry)
            else:
                outcome = Cycle(period, entry)
            return Trajectory(seed, tuple(visited), tuple(steps), outcome)
        pos[nxt] = len(visited)
        visited.append(nxt)
        cur = nxt
    raise IterationLimitError(f"no repeat within {max_steps} steps from {seed!r}")


@dataclass(frozen=True)
class FixedPointReport:
    fixed_points: tuple[str, ...]
    consistency: bool | None = None

    @property
    def unique(self) -> bool:
        return len(self.fixed_points) == 1

    def to_dict(self) -> dict:
        return {"fixed_points": list(self.fixed_points), "unique": self.unique,
                "consistency": self.consistency}


def enumerate_fixed_points(space: FiniteBMetricSpace, smap: SelfMap,
                           certificate: ContractionCertificate | None = None) -> FixedPointReport:
    fixed = tuple(p for p in space.points if smap(p) == p)
    consistency = None
    if certificate is not None and certificate.certified:
        consistency = len(fixed) == 1
    return FixedPointReport(fixed, consistency)


class Continuity(NamedTuple):
    continuous: bool
    justification: str


def check_b_continuity(space: FiniteBMetricSpace, smap: SelfMap) -> Continuity:
    """Every self-map of a finite separated space is b-continuous.

    With delta the least positive distance, a sequence converging to a has
    d(a_n, a) < delta eventually, so a_n = a eventually and S a_n = S a.
    """
    if smap.points != space.points:
        raise SpaceError("map and space have different points")
    n = len(space)
    if n == 1:
        return Continuity(True, "one-point space: every sequence is constant")
    delta = min(space.distances[i][j] for i in range(n) for j in range(n) if i != j)
    if not delta > 0:
        return Continuity(False, "distinct points at distance 0; separation fails")
    return Continuity(True, (
        f"finite separated space (least positive distance {delta!r}): convergent "
        "sequences are eventually constant, so their images are too"))


@dataclass(frozen=True)
class ConsequenceReport:
    status: str  # "pass" | "fail" | "not applicable"
    condition: str
    fixed_points: tuple[str, ...] = ()
    offending_seed: str | None = None
    reason: str = ""
    warnings: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "condition": self.condition,
            "fixed_points": list(self.fixed_points),
            "offending_seed": self.offending_seed,
            "reason": self.reason,
            "warnings": list(self.warnings),
        }


def check_theorem_consequence(space: FiniteBMetricSpace, smap: SelfMap,
                              certificate: ContractionCertificate) -> ConsequenceReport:
    """If the certificate holds, check a unique fixed point reached from every seed.

    A fail points at a bug or an invalid suite, never at the theorem. The
    step-distance monotonicity check is advisory and lands in ``warnings``.
    """
    if not certificate.matches(space, smap):
        raise SpaceError("certificate was produced for a different space or map")
    cond = certificate.condition
    if not certificate.certified:
        return ConsequenceReport("not applicable", cond, reason="certificate not certified")
    if cond == "generalized":
        cont = check_b_continuity(space, smap)
        if not cont.continuous:
            return ConsequenceReport("not applicable", cond, reason=f"map not b-continuous: {cont.justification}")
    fixed = enumerate_fixed_points(space, smap).fixed_points
    if len(fixed) != 1:
        return ConsequenceReport("fail", cond, fixed, reason=f"expected one fixed point, found {len(fixed)}")
    z = fixed[0]
    warnings = []
    for seed in space.points:
        traj = picard_iterate(space, smap, seed)
        if not (isinstance(traj.outcome, FixedPoint) and traj.outcome.point == z):
            return ConsequenceReport("fail", cond, fixed, seed, reason=f"orbit from {seed!r} does not end at {z!r}")
        if not traj.steps_strictly_decreasing():
            warnings.append(f"step distances from {seed!r} not strictly decreasing: {list(traj.step_distances)}")
    return ConsequenceReport("pass", cond, fixed, reason=f"unique fixed point {z!r} reached from every seed",
                             warnings=tuple(warnings))
