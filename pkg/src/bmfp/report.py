"""Rendering of result dictionaries as JSON or plain-text tables.

Both renderers round floats the same way first, so a JSON run and a table
run of the same command show the same numbers.
"""

from __future__ import annotations

import json
import math
from typing import Any

DEFAULT_PRECISION = 6


def round_sig(x: float, digits: int) -> float:
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


def rounded(obj: Any, digits: int) -> Any:
    if isinstance(obj, float):
        return round_sig(obj, digits)
    if isinstance(obj, dict):
        return {k: rounded(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v, digits) for v in obj]
    return obj


def fmt(v: Any, digits: int = DEFAULT_PRECISION) -> str:
    if isinstance(v, float):
        return f"{round_sig(v, digits):.{digits}g}"
    if v is None:
        return "-"
    return str(v)


def to_json(obj: Any, digits: int = DEFAULT_PRECISION) -> str:
    return json.dumps(rounded(obj, digits), indent=2, ensure_ascii=False)


def _grid(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    return [line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows]


def validation_lines(v: dict, digits: int) -> list[str]:
    out = [f"axioms: {v['verdict']}"]
    for x in v["violations"]:
        where = x.get("labels", x["indices"])
        out.append(f"  axiom ({x['axiom']}) at ({', '.join(map(str, where))}): "
                   f"lhs {fmt(x['lhs'], digits)} rhs {fmt(x['rhs'], digits)}")
    return out


def certificate_lines(cert: dict, digits: int) -> list[str]:
    rows = [[f"({r['pair'][0]},{r['pair'][1]})", fmt(r["image_distance"], digits),
             fmt(r["argument_distance"], digits), fmt(r["j_value"], digits), fmt(r["margin"], digits),
             "ok" if r["margin"] >= -cert["tolerance"] else "FAIL"]
            for r in cert["records"]]
    arg = "d(x,y)" if cert["condition"] == "basic" else "M_s(x,y)"
    out = [f"condition: {cert['condition']}  c = {fmt(cert['c'], digits)}"]
    out += _grid(["pair", "d(Sx,Sy)", arg, "j_value", "margin", "verdict"], rows)
    out.append(f"qualifying pairs: {cert['qualifying_pairs']}  min j_value: {fmt(cert['min_j_value'], digits)}"
               f"  min margin: {fmt(cert['min_margin'], digits)}")
    wit = ", ".join(f"({a},{b})" for a, b in cert["witnesses"]) or "none"
    out.append(f"verdict: {cert['verdict']}  witnesses: {wit}")
    return out


def trajectory_lines(t: dict, digits: int) -> list[str]:
    o = t["outcome"]
    if o["kind"] == "fixed_point":
        end = f"FixedPoint({o['point']}, step {o['step']})"
    else:
        end = f"Cycle(period {o['period']}, entry {o['entry']})"
    steps = ", ".join(fmt(r, digits) for r in t["step_distances"])
    return [f"seed {t['seed']}: visited [{', '.join(t['visited'])}] -> {end}  steps [{steps}]"]


def fixed_point_lines(f: dict) -> list[str]:
    pts = ", ".join(f["fixed_points"]) or "none"
    out = [f"fixed points: {pts}  unique: {f['unique']}"]
    if len(f["fixed_points"]) == 1:
        out.append(f"unique fixed point: {f['fixed_points'][0]}")
    return out


def render_table(kind: str, obj: dict, digits: int = DEFAULT_PRECISION) -> str:
    obj = rounded(obj, digits)
    out: list[str] = []
    if kind == "validate":
        out.append(f"declared coefficient {fmt(obj['declared_coefficient'], digits)}")
        out.append(f"minimal coefficient {fmt(obj['minimal_coefficient'], digits)}")
        out += validation_lines(obj["validation"], digits)
    elif kind == "coefficient":
        out.append(f"minimal coefficient {fmt(obj['minimal_coefficient'], digits)}")
        if obj["attained_at"]:
            out.append(f"attained at ({', '.join(obj['attained_at'])})")
    elif kind == "certify":
        for w in obj.get("warnings", []):
            out.append(f"warning: {w}")
        out += certificate_lines(obj["certificate"], digits)
    elif kind == "iterate":
        out += trajectory_lines(obj, digits)
    elif kind == "fixed-points":
        out += fixed_point_lines(obj)
    elif kind == "demo":
        sp = obj["space"]
        out.append(f"example {obj['example']}")
        out.append(f"declared coefficient {fmt(sp['declared_coefficient'], digits)}")
        out.append(f"minimal coefficient {fmt(sp['minimal_coefficient'], digits)}"
                   + (f" at ({', '.join(sp['minimal_attained_at'])})" if sp["minimal_attained_at"] else ""))
        out += validation_lines(sp["validation"], digits)
        m = obj["membership"]
        out.append(f"membership k = {fmt(m['k'], digits)}, s = {fmt(m['s'], digits)}: {m['member']}")
        for cert in obj["certificates"]:
            out.append("")
            out += certificate_lines(cert, digits)
        out.append("")
        out.append(f"b-continuity: {obj['b_continuity']['continuous']}")
        for t in obj["trajectories"]:
            out += trajectory_lines(t, digits)
        out += fixed_point_lines(obj["fixed_points"])
        c = obj["consequence"]
        out.append(f"theorem consequence ({c['condition']}): {c['status']}: {c['reason']}")
        out.append(f"claim holds: {obj['claim_holds']}")
    else:
        raise ValueError(kind)
    return "\n".join(out)
