"""JSON file formats for spaces, maps and function suites."""

from __future__ import annotations

import json
import math
import re
from pathlib import Path
from typing import Any

from .functions import THETA_FAMILIES, FunctionSuite, ratio, scaled_ratio
from .space import FiniteBMetricSpace, SelfMap, SpaceError, build_map, build_space


class InputError(ValueError):
    """Malformed or inconsistent input file."""


_SQRT = re.compile(r"^\s*sqrt\(\s*([0-9eE+.\-]+)\s*\)\s*$")


def parse_number(value: Any, what: str = "value") -> float:
    """Accept a JSON number, a numeric string, or ``"sqrt(N)"``."""
    if isinstance(value, bool):
        raise InputError(f"{what}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        out = float(value)
    elif isinstance(value, str):
        m = _SQRT.match(value)
        try:
            out = math.sqrt(float(m.group(1))) if m else float(value)
        except ValueError:
            raise InputError(f"{what}: cannot parse {value!r}") from None
    else:
        raise InputError(f"{what}: expected a number, got {value!r}")
    if not math.isfinite(out):
        raise InputError(f"{what}: not finite")
    return out


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None


def space_fields(data: Any) -> tuple[list[str], list[list[float]], float]:
    """Unpack a space document without checking the axioms."""
    if not isinstance(data, dict):
        raise InputError("space: expected a JSON object")
    for key in ("points", "distances", "coefficient"):
        if key not in data:
            raise InputError(f"space: missing {key!r}")
    points = data["points"]
    if not isinstance(points, list) or not points:
        raise InputError("space: 'points' must be a nonempty list")
    labels = [str(p) for p in points]
    if len(set(labels)) != len(labels):
        raise InputError("space: point labels must be unique")
    rows = data["distances"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("space: 'distances' must be a list of lists")
    if len(rows) != len(labels) or any(len(r) != len(labels) for r in rows):
        raise InputError(f"space: 'distances' must be {len(labels)} x {len(labels)}")
    dist = [[parse_number(v, "distance") for v in r] for r in rows]
    s = parse_number(data["coefficient"], "coefficient")
    return labels, dist, s


def space_from_dict(data: Any) -> FiniteBMetricSpace:
    labels, dist, s = space_fields(data)
    try:
        return build_space(labels, dist, s)
    except SpaceError as e:
        raise InputError(f"space: {e}") from None


def map_from_dict(space: FiniteBMetricSpace, data: Any) -> SelfMap:
    if not isinstance(data, dict) or not isinstance(data.get("table"), dict):
        raise InputError("map: expected {\"table\": {...}}")
    try:
        return build_map(space, data["table"])
    except SpaceError as e:
        raise InputError(f"map: {e}") from None


def suite_from_dict(data: Any) -> FunctionSuite:
    if not isinstance(data, dict):
        raise InputError("suite: expected a JSON object")
    try:
        theta_kind = data["theta"]["kind"]
        fc, j = data["fc"], data["j"]
        fc_kind, j_kind = fc["kind"], j["kind"]
    except (KeyError, TypeError):
        raise InputError("suite: needs theta.kind, fc.kind and j.kind") from None
    if theta_kind not in THETA_FAMILIES:
        raise InputError(f"suite: unknown theta kind {theta_kind!r}")
    if fc_kind != "ratio":
        raise InputError(f"suite: unknown fc kind {fc_kind!r}")
    if j_kind != "scaled_ratio":
        raise InputError(f"suite: unknown j kind {j_kind!r}")
    c = parse_number(fc.get("c", 1.0), "fc.c")
    if "k" not in j:
        raise InputError("suite: scaled_ratio needs 'k'")
    k = parse_number(j["k"], "j.k")
    try:
        return FunctionSuite(THETA_FAMILIES[theta_kind](), ratio(c), scaled_ratio(k))
    except ValueError as e:
        raise InputError(f"suite: {e}") from None


def load_space(path) -> FiniteBMetricSpace:
    return space_from_dict(read_json(path))


def load_map(space: FiniteBMetricSpace, path) -> SelfMap:
    return map_from_dict(space, read_json(path))


def load_suite(path) -> FunctionSuite:
    return suite_from_dict(read_json(path))
