"""Auxiliary function families: theta, F_c comparison operators, simulation functions.

Built-in families have closed-form membership rules. The ``check_*``
functions are sampled falsifiers: a pass means no violation was found on
the samples, a fail carries a witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from .space import ATOL, RTOL, exceeds

LADDER = tuple(2.0 ** -m for m in range(1, 41))
REFINE_FACTOR = 4
REFINE_ROUNDS = 16
JUMP_RTOL = 1e-6


def log_grid(lo: float, hi: float, n: int = 64, include_lo: bool = False) -> list[float]:
    """``n`` log-spaced samples on (lo, hi] (or [lo, hi] with ``include_lo``)."""
    a, b = math.log(lo), math.log(hi)
    if include_lo:
        return [math.exp(a + (b - a) * i / (n - 1)) for i in range(n)]
    return [math.exp(a + (b - a) * i / n) for i in range(1, n + 1)]


DEFAULT_AXIS = tuple(log_grid(1.0, 1e3))
DEFAULT_THETA_GRID = tuple(log_grid(1e-3, 1e2, include_lo=True))


@dataclass(frozen=True)
class ThetaFunction:
    kind: str
    fn: Callable[[float], float] = field(repr=False, compare=False)

    def __call__(self, x: float) -> float:
        return self.fn(x)

    def to_dict(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class FcOperator:
    kind: str
    c: float
    fn: Callable[[float, float], float] = field(repr=False, compare=False)

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "c": self.c}


@dataclass(frozen=True)
class SimulationFunction:
    kind: str
    k: float | None
    fn: Callable[[float, float], float] = field(repr=False, compare=False)

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k}


def affine_plus_one() -> ThetaFunction:
    return ThetaFunction("affine_plus_one", lambda x: x + 1.0)


def exponential() -> ThetaFunction:
    return ThetaFunction("exponential", math.exp)


def custom_theta(name: str, fn: Callable[[float], float]) -> ThetaFunction:
    return ThetaFunction(name, fn)


def ratio(c: float = 1.0) -> FcOperator:
    if not c >= 1.0:
        raise ValueError(f"F_c constant must be >= 1, got {c!r}")
    return FcOperator("ratio", float(c), lambda x, y: x / y)


def custom_fc(name: str, fn: Callable[[float, float], float], c: float = 1.0) -> FcOperator:
    return FcOperator(name, float(c), fn)


def scaled_ratio(k: float) -> SimulationFunction:
    """J(x, y) = y / (k x). Only k > 1 gives a simulation function; smaller k
    is accepted so the checkers can be pointed at non-members."""
    if not k > 0:
        raise ValueError(f"scaled_ratio needs k > 0, got {k!r}")
    k = float(k)
    return SimulationFunction("scaled_ratio", k, lambda x, y: y / (k * x))


def custom_j(name: str, fn: Callable[[float, float], float]) -> SimulationFunction:
    return SimulationFunction(name, None, fn)


THETA_FAMILIES = {"affine_plus_one": affine_plus_one, "exponential": exponential}


def theta_eval(theta: ThetaFunction, x: float) -> float:
    if not x > 0:
        raise ValueError(f"theta is defined on (0, inf), got {x!r}")
    return theta(x)


def fc_eval(op: FcOperator, x: float, y: float) -> float:
    if not (x >= 1 and y >= 1):
        raise ValueError(f"F_c is defined on [1, inf)^2, got ({x!r}, {y!r})")
    return op(x, y)


def j_eval(j: SimulationFunction, x: float, y: float) -> float:
    if not (x >= 1 and y >= 1):
        raise ValueError(f"simulation function is defined on [1, inf)^2, got ({x!r}, {y!r})")
    return j(x, y)


@dataclass(frozen=True)
class Witness:
    condition: str
    point: tuple[float, ...]
    detail: str

    def to_dict(self) -> dict:
        return {"condition": self.condition, "point": list(self.point), "detail": self.detail}


@dataclass(frozen=True)
class CheckReport:
    name: str
    witnesses: tuple[Witness, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def failed(self, condition: str) -> list[Witness]:
        return [w for w in self.witnesses if w.condition == condition]

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "verdict": "pass" if self.passed else "fail",
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def find_jump(f: Callable[[float], float], a: float, b: float,
              rounds: int = REFINE_ROUNDS, factor: int = REFINE_FACTOR,
              rtol: float = JUMP_RTOL) -> tuple[float, float, float] | None:
    """Look for a discontinuity of ``f`` inside [a, b].

    Repeatedly splits the current interval into ``factor`` pieces and keeps
    the piece with the largest change. For a continuous function the change
    shrinks with the width; a jump survives every round. Returns the final
    bracket and jump size when the change stays above ``rtol`` (relative).
    """
    fa, fb = f(a), f(b)
    for _ in range(rounds):
        xs = [a + (b - a) * i / factor for i in range(factor + 1)]
        xs[-1] = b
        fs = [fa] + [f(x) for x in xs[1:-1]] + [fb]
        i = max(range(factor), key=lambda t: abs(fs[t + 1] - fs[t]))
        na, nb = xs[i], xs[i + 1]
        if not (a <= na < nb <= b) or (na, nb) == (a, b):
            break
        a, b, fa, fb = na, nb, fs[i], fs[i + 1]
    jump = abs(fb - fa)
    if jump > rtol * max(1.0, abs(fa), abs(fb)):
        return (a, b, jump)
    return None


def _ladder_stalls(values: Sequence[float], tol: float) -> bool:
    """True when ``values`` (on the 2^-m ladder) do not head toward 1."""
    gaps = [v - 1.0 for v in values]
    if gaps[-1] <= tol:
        return False
    # still far from 1: accept only if the gap keeps shrinking geometrically
    return gaps[-1] > 0.99 * gaps[-11]


def check_theta_membership(theta: ThetaFunction, grid: Sequence[float] | None = None,
                           tol: float = 1e-9) -> CheckReport:
    """Sampled check of conditions (a), (b), (d) plus the (1, inf) range."""
    xs = list(DEFAULT_THETA_GRID if grid is None else grid)
    if len(xs) < 16:
        raise ValueError("theta grid needs at least 16 samples")
    if any(x <= 0 for x in xs):
        raise ValueError("theta grid must be positive")
    xs = sorted(set(xs))
    out: list[Witness] = []
    vals = [theta(x) for x in xs]
    for x, v in zip(xs, vals):
        if not v > 1.0:
            out.append(Witness("range", (x,), f"theta({x!r}) = {v!r} is not > 1"))
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if not vals[j] > vals[i]:
                out.append(Witness("a", (xs[i], xs[j]),
                                   f"theta({xs[j]!r}) = {vals[j]!r} <= theta({xs[i]!r}) = {vals[i]!r}"))
    lad = [theta(x) for x in LADDER]
    for m in range(1, len(lad)):
        if exceeds(lad[m], lad[m - 1]):
            out.append(Witness("b", (LADDER[m],), f"ladder values rise toward 0: {lad[m]!r} > {lad[m - 1]!r}"))
            break
    if _ladder_stalls(lad, tol):
        out.append(Witness("b", (LADDER[-1],), f"theta({LADDER[-1]!r}) = {lad[-1]!r} does not approach 1"))
    for a, b in zip(xs, xs[1:]):
        hit = find_jump(theta, a, b)
        if hit:
            out.append(Witness("d", (hit[0], hit[1]), f"jump of {hit[2]!r} inside [{hit[0]!r}, {hit[1]!r}]"))
    out.sort(key=lambda w: (w.condition, w.point))
    return CheckReport("theta_membership", tuple(out))


class PowerLimit(NamedTuple):
    t: float
    estimate: float
    holds: bool


def theta_power_limit(theta: ThetaFunction, t: float) -> PowerLimit:
    """Optional diagnostic for condition (c): (theta(x) - 1) / x**t as x -> 0+.

    The condition asks for t in (0, 1) and a limit in (0, inf]; the estimate
    is read off the smallest ladder rung.
    """
    x = LADDER[-1]
    est = (theta(x) - 1.0) / x ** t
    return PowerLimit(t, est, 0.0 < t < 1.0 and est > ATOL)


def check_fc_properties(op: FcOperator, axis: Sequence[float] | None = None,
                        rtol: float = RTOL) -> CheckReport:
    """Sampled check of properties (i)-(iv) on ``axis x axis``."""
    xs = sorted(set(([1.0] + list(DEFAULT_AXIS)) if axis is None else axis))
    if not xs:
        raise ValueError("empty grid")
    if xs[0] < 1.0:
        raise ValueError("F_c grid must lie in [1, inf)")
    c = op.c
    out: list[Witness] = []
    table = {(x, y): op(x, y) for x in xs for y in xs}
    for (x, y), v in table.items():
        if exceeds(v, x, rtol):
            out.append(Witness("ii", (x, y), f"F({x!r}, {y!r}) = {v!r} > {x!r}"))
        if math.isclose(v, x, rel_tol=rtol, abs_tol=ATOL) and x != 1.0 and y != 1.0:
            out.append(Witness("iii", (x, y), f"F({x!r}, {y!r}) = x with x, y != 1"))
        if exceeds(v, c, rtol) and not x > y:
            out.append(Witness("iv", (x, y), f"F({x!r}, {y!r}) = {v!r} > c = {c!r} but x <= y"))
        if x == y and exceeds(v, c, rtol):
            out.append(Witness("iv", (x, x), f"F({x!r}, {x!r}) = {v!r} > c = {c!r}"))
    for y in xs:
        for a, b in zip(xs, xs[1:]):
            hit = find_jump(lambda t: op(t, y), a, b)
            if hit:
                out.append(Witness("i", (hit[0], y), f"jump of {hit[2]!r} in x near ({hit[0]!r}, {y!r})"))
    for x in xs:
        for a, b in zip(xs, xs[1:]):
            hit = find_jump(lambda t: op(x, t), a, b)
            if hit:
                out.append(Witness("i", (x, hit[0]), f"jump of {hit[2]!r} in y near ({x!r}, {hit[0]!r})"))
    out.sort(key=lambda w: (w.condition, w.point))
    return CheckReport("fc_properties", tuple(out))


def check_j_property_i(j: SimulationFunction, op: FcOperator,
                       axis: Sequence[float] | None = None) -> CheckReport:
    """J(x, y) < F_c(y, x), strictly, on every sample of ``axis x axis``."""
    xs = sorted(set(DEFAULT_AXIS if axis is None else axis))
    if any(x <= 1.0 for x in xs):
        raise ValueError("grid values must be strictly above 1")
    out = []
    for x in xs:
        for y in xs:
            jv, fv = j(x, y), op(y, x)
            if not jv < fv:
                out.append(Witness("i", (x, y), f"J({x!r}, {y!r}) = {jv!r} >= F({y!r}, {x!r}) = {fv!r}"))
    return CheckReport("j_property_i", tuple(out))


@dataclass(frozen=True)
class SequencePairProbe:
    a: tuple[float, ...]
    b: tuple[float, ...]
    s: float
    tail_start: int | None = None  # default: second half

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        if len(self.a) != len(self.b) or not self.a:
            raise ValueError("probe sequences must be nonempty and of equal length")
        if any(v <= 0 for v in self.a + self.b):
            raise ValueError("probe entries must be positive")
        if self.s < 1:
            raise ValueError("s must be >= 1")

    def tail(self) -> tuple[tuple[float, ...], tuple[float, ...]]:
        start = len(self.a) // 2 if self.tail_start is None else self.tail_start
        return self.a[start:], self.b[start:]


@dataclass(frozen=True)
class ProbeReport:
    status: str  # "pass" | "fail" | "hypothesis not met"
    limsup: float | None
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def probe_hypothesis(probe: SequencePairProbe) -> str | None:
    """Return a reason when the interleaved bound chains fail on the tail, else None."""
    ta, tb = probe.tail()
    s = probe.s
    inf_a, sup_a, inf_b, sup_b = min(ta), max(ta), min(tb), max(tb)
    if not (0 < inf_a <= s * sup_b <= s * s * inf_a):
        return f"chain on a fails: {inf_a!r} <= {s * sup_b!r} <= {s * s * inf_a!r}"
    if not (0 < inf_b <= s * sup_a <= s * s * inf_b):
        return f"chain on b fails: {inf_b!r} <= {s * sup_a!r} <= {s * s * inf_b!r}"
    return None


def check_j_property_ii(j: SimulationFunction, theta: ThetaFunction,
                        probe: SequencePairProbe, c: float) -> ProbeReport:
    """Tail-window estimate of limsup J(theta(a_n), theta(b_n)) < c for one probe."""
    reason = probe_hypothesis(probe)
    if reason:
        return ProbeReport("hypothesis not met", None, reason)
    ta, tb = probe.tail()
    sup = max(j(theta(x), theta(y)) for x, y in zip(ta, tb))
    if sup < c:
        return ProbeReport("pass", sup, f"tail limsup {sup!r} < c = {c!r}")
    return ProbeReport("fail", sup, f"tail limsup {sup!r} >= c = {c!r}")


class Membership(NamedTuple):
    member: bool
    justification: str


def scaled_ratio_membership(k: float, s: float) -> Membership:
    """Closed-form rule for J(x, y) = y / (k x) with theta(x) = x + 1, F_c = x / y, c = 1."""
    if not (k > 0 and s >= 1):
        raise ValueError("need k > 0 and s >= 1")
    if k > 1 and k >= s:
        return Membership(True, (
            f"k = {k!r} > 1 gives J(x, y) < y / x on (1, inf)^2; the bound chains give "
            f"limsup b_n <= s liminf a_n = L s, so limsup (b_n + 1) / (k (a_n + 1)) "
            f"<= (s L + 1) / (k L + k) < 1 since k >= s = {s!r} and k > 1"))
    if k <= 1:
        return Membership(False, (
            f"k = {k!r} <= 1: equal constant sequences give limsup J = 1 / k >= 1 = c"))
    return Membership(False, (
        f"k = {k!r} < s = {s!r}: the bound (s L + 1) / (k L + k) can exceed 1, "
        f"so the limsup condition is not guaranteed"))


@dataclass(frozen=True)
class FunctionSuite:
    theta: ThetaFunction
    fc: FcOperator
    j: SimulationFunction

    @property
    def c(self) -> float:
        return self.fc.c

    def j_value(self, image_distance: float, argument_distance: float) -> float:
        return self.j(self.theta(image_distance), self.theta(argument_distance))

    def to_dict(self) -> dict:
        return {"theta": self.theta.to_dict(), "fc": self.fc.to_dict(), "j": self.j.to_dict()}


def builtin_suite(k: float, theta: str = "affine_plus_one", c: float = 1.0) -> FunctionSuite:
    return FunctionSuite(THETA_FAMILIES[theta](), ratio(c), scaled_ratio(k))
