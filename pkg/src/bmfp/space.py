"""Finite b-metric spaces: construction, axiom validation, minimal coefficient.

A b-metric relaxes the triangle inequality to
``d(x, z) <= s * (d(x, y) + d(y, z))`` for some coefficient ``s >= 1``.
Spaces here are small labelled point sets with an explicit distance table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

RTOL = 1e-9
ATOL = 1e-12


class SpaceError(ValueError):
    """Bad input for a space or map (shape, labels, values)."""


class UnknownLabelError(SpaceError, KeyError):
    pass


class AxiomViolationError(SpaceError):
    def __init__(self, report: "ValidationReport", points: Sequence[Hashable] | None = None):
        self.report = report
        first = report.violations[0].describe(points)
        more = len(report.violations) - 1
        msg = f"b-metric axioms fail: {first}"
        if more:
            msg += f" (+{more} more)"
        super().__init__(msg)


class NoFiniteCoefficientError(SpaceError):
    pass


def exceeds(lhs: float, rhs: float, rtol: float = RTOL, atol: float = ATOL) -> bool:
    """True when ``lhs <= rhs`` fails beyond tolerance."""
    return lhs > rhs + max(rtol * abs(rhs), atol)


@dataclass(frozen=True)
class Violation:
    axiom: str  # "i", "ii", "iii" or "nonneg"
    indices: tuple[int, ...]
    lhs: float
    rhs: float

    def describe(self, points: Sequence[Hashable] | None = None) -> str:
        where = self.indices if points is None else tuple(points[i] for i in self.indices)
        if self.axiom == "i":
            rel = "!= 0" if len(set(self.indices)) == 1 else "== 0"
            return f"axiom (i) at {where}: d = {self.lhs!r} {rel}"
        if self.axiom == "ii":
            return f"axiom (ii) at {where}: {self.lhs!r} != {self.rhs!r}"
        if self.axiom == "iii":
            return f"axiom (iii) at {where}: {self.lhs!r} > {self.rhs!r}"
        return f"negative distance at {where}: {self.lhs!r}"

    def to_dict(self, points: Sequence[Hashable] | None = None) -> dict:
        d = {"axiom": self.axiom, "indices": list(self.indices), "lhs": self.lhs, "rhs": self.rhs}
        if points is not None:
            d["labels"] = [points[i] for i in self.indices]
        return d


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def first(self, axiom: str) -> Violation | None:
        return next((v for v in self.violations if v.axiom == axiom), None)

    def to_dict(self, points: Sequence[Hashable] | None = None) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "violations": [v.to_dict(points) for v in self.violations],
        }


_AXIOM_ORDER = {"nonneg": 0, "i": 1, "ii": 2, "iii": 3}


def _as_matrix(distances: Sequence[Sequence[float]]) -> tuple[tuple[float, ...], ...]:
    rows = tuple(tuple(float(v) for v in row) for row in distances)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise SpaceError(f"distance matrix is not square: row {i} has {len(row)} entries, expected {n}")
    for row in rows:
        for v in row:
            if not math.isfinite(v):
                raise SpaceError(f"non-finite distance {v!r}")
    return rows


def _pair_violations(d, rtol: float) -> list[Violation]:
    out = []
    n = len(d)
    for i in range(n):
        for j in range(n):
            v = d[i][j]
            if v < 0:
                out.append(Violation("nonneg", (i, j), v, 0.0))
            if i == j and v != 0.0:
                out.append(Violation("i", (i, i), v, 0.0))
            elif i != j and v == 0.0:
                out.append(Violation("i", (i, j), v, 0.0))
            if i < j and (exceeds(v, d[j][i], rtol) or exceeds(d[j][i], v, rtol)):
                out.append(Violation("ii", (i, j), v, d[j][i]))
    return out


def _sorted(out: list[Violation]) -> ValidationReport:
    out.sort(key=lambda v: (_AXIOM_ORDER[v.axiom], v.indices))
    return ValidationReport(tuple(out))


def validate_pairs(distances: Sequence[Sequence[float]], rtol: float = RTOL) -> ValidationReport:
    """Nonnegativity, axiom (i) and axiom (ii) only; no coefficient needed."""
    return _sorted(_pair_violations(_as_matrix(distances), rtol))


def validate_axioms(
    distances: Sequence[Sequence[float]],
    coefficient: float,
    rtol: float = RTOL,
) -> ValidationReport:
    """Check b-metric axioms (i)-(iii) over every index tuple.

    Axiom (i) is compared exactly against 0.0; symmetry and the relaxed
    triangle inequality use relative tolerance ``rtol``. Every violation is
    reported, ordered by axiom and then lexicographically by index tuple.
    """
    d = _as_matrix(distances)
    n = len(d)
    s = float(coefficient)
    out = _pair_violations(d, rtol)
    for i in range(n):
        for j in range(n):
            dij = d[i][j]
            for k in range(n):
                rhs = s * (dij + d[j][k])
                if exceeds(d[i][k], rhs, rtol):
                    out.append(Violation("iii", (i, j, k), d[i][k], rhs))
    return _sorted(out)


def minimal_coefficient(distances: Sequence[Sequence[float]]) -> float:
    """Least ``s >= 1`` for which the relaxed triangle inequality holds.

    Brute force over ordered triples (x, y, z) with x != z and y not in
    {x, z}. Assumes axioms (i) and (ii) hold.
    """
    d = _as_matrix(distances)
    n = len(d)
    best = 1.0
    for x in range(n):
        for z in range(n):
            if x == z:
                continue
            for y in range(n):
                if y == x or y == z:
                    continue
                den = d[x][y] + d[y][z]
                if den == 0.0:
                    if d[x][z] > 0.0:
                        raise NoFiniteCoefficientError(
                            f"no finite coefficient: d[{x}][{z}] > 0 but d[{x}][{y}] + d[{y}][{z}] = 0"
                        )
                    continue
                best = max(best, d[x][z] / den)
    return best


def argmax_coefficient(distances: Sequence[Sequence[float]]) -> tuple[int, int, int] | None:
    """First triple (lexicographic) attaining the minimal coefficient, if above 1."""
    d = _as_matrix(distances)
    m = minimal_coefficient(d)
    if m == 1.0:
        return None
    n = len(d)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if x == z or y in (x, z):
                    continue
                den = d[x][y] + d[y][z]
                if den > 0 and d[x][z] / den == m:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class FiniteBMetricSpace:
    points: tuple[str, ...]
    distances: tuple[tuple[float, ...], ...]
    coefficient: float
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown point {label!r}") from None

    def d(self, x: str, y: str) -> float:
        return self.distances[self.index(x)][self.index(y)]

    @property
    def minimal_coefficient(self) -> float:
        return minimal_coefficient(self.distances)

    def relabel(self, mapping: Mapping[str, str], order: Sequence[str] | None = None) -> "FiniteBMetricSpace":
        """Same space with points renamed through ``mapping``, optionally reordered."""
        new_points = [mapping[p] for p in self.points]
        if order is None:
            order = new_points
        pos = {p: i for i, p in enumerate(new_points)}
        idx = [pos[p] for p in order]
        dist = [[self.distances[a][b] for b in idx] for a in idx]
        return build_space(list(order), dist, self.coefficient)

    def to_dict(self) -> dict:
        return {
            "points": list(self.points),
            "distances": [list(r) for r in self.distances],
            "coefficient": self.coefficient,
        }


def build_space(
    points: Sequence[Hashable],
    distances: Sequence[Sequence[float]],
    coefficient: float,
    rtol: float = RTOL,
) -> FiniteBMetricSpace:
    """Build a validated finite b-metric space.

    Labels are stored as strings. Raises :class:`SpaceError` for shape or
    label problems and :class:`AxiomViolationError` (carrying the full
    report) when an axiom fails at the declared coefficient.
    """
    labels = tuple(str(p) for p in points)
    if not labels:
        raise SpaceError("a space needs at least one point")
    if len(set(labels)) != len(labels):
        raise SpaceError("point labels must be unique")
    d = _as_matrix(distances)
    if len(d) != len(labels):
        raise SpaceError(f"distance matrix has side {len(d)} but there are {len(labels)} points")
    s = float(coefficient)
    if not math.isfinite(s) or s < 1.0:
        raise SpaceError(f"coefficient must be a finite real >= 1, got {coefficient!r}")
    for i, row in enumerate(d):
        for j, v in enumerate(row):
            if v < 0:
                raise SpaceError(f"negative distance {v!r} at ({labels[i]}, {labels[j]})")
    report = validate_axioms(d, s, rtol)
    if not report.passed:
        raise AxiomViolationError(report, labels)
    return FiniteBMetricSpace(labels, d, s)


def distance(space: FiniteBMetricSpace, x: str, y: str) -> float:
    return space.d(x, y)


@dataclass(frozen=True)
class SelfMap:
    """Total map from the points of a space to itself, as a lookup table."""

    points: tuple[str, ...]
    images: tuple[str, ...]

    def __call__(self, x: str) -> str:
        try:
            return self.images[self.points.index(x)]
        except ValueError:
            raise UnknownLabelError(f"unknown point {x!r}") from None

    @property
    def table(self) -> dict[str, str]:
        return dict(zip(self.points, self.images))

    def to_dict(self) -> dict:
        return {"table": self.table}


def build_map(space: FiniteBMetricSpace, table: Mapping[Hashable, Hashable]) -> SelfMap:
    tab = {str(k): str(v) for k, v in table.items()}
    missing = [p for p in space.points if p not in tab]
    if missing:
        raise SpaceError(f"map has no image for {missing}")
    extra = sorted(k for k in tab if k not in space)
    if extra:
        raise SpaceError(f"map has entries for unknown points {extra}")
    bad = sorted({v for v in tab.values() if v not in space})
    if bad:
        raise SpaceError(f"map sends points outside the space: {bad}")
    return SelfMap(space.points, tuple(tab[p] for p in space.points))


def identity_map(space: FiniteBMetricSpace) -> SelfMap:
    return SelfMap(space.points, space.points)


def constant_map(space: FiniteBMetricSpace, target: str) -> SelfMap:
    space.index(target)
    return SelfMap(space.points, tuple(target for _ in space.points))


def is_metric(distances: Iterable[Sequence[float]]) -> bool:
    return minimal_coefficient(list(distances)) <= 1.0 + RTOL
