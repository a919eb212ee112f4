"""Command-line front end.

Exit codes: 0 when the claim under test holds, 1 when it is refuted with a
witness, 2 for bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import io
from .certify import certify
from .demos import run_demo
from .engine import Cycle, IterationLimitError, enumerate_fixed_points, picard_iterate
from .functions import scaled_ratio_membership
from .report import DEFAULT_PRECISION, render_table, to_json
from .space import (RTOL, NoFiniteCoefficientError, SpaceError, argmax_coefficient, minimal_coefficient,
                    validate_axioms, validate_pairs)

ENV_TOLERANCE = "BMFP_TOLERANCE"


@dataclass
class RunConfig:
    command: str
    fmt: str = "table"
    precision: int = DEFAULT_PRECISION
    tolerance: float = RTOL


def _tolerance(arg: str | None) -> float:
    raw = arg if arg is not None else os.environ.get(ENV_TOLERANCE)
    if raw is None:
        return RTOL
    try:
        tol = float(raw)
    except ValueError:
        raise io.InputError(f"tolerance: cannot parse {raw!r}") from None
    if not tol > 0:
        raise io.InputError("tolerance must be > 0")
    return tol


def cmd_validate(args, cfg: RunConfig) -> tuple[int, dict]:
    labels, dist, s = io.space_fields(io.read_json(args.space))
    if args.coefficient is not None:
        s = io.parse_number(args.coefficient, "--coefficient")
    if s < 1:
        raise io.InputError("coefficient must be >= 1")
    report = validate_axioms(dist, s, cfg.tolerance)
    try:
        m = minimal_coefficient(dist) if validate_pairs(dist, cfg.tolerance).passed else None
    except NoFiniteCoefficientError:
        m = None
    out = {"declared_coefficient": s, "minimal_coefficient": m, "validation": report.to_dict(labels)}
    return (0 if report.passed else 1), out


def cmd_coefficient(args, cfg: RunConfig) -> tuple[int, dict]:
    labels, dist, _ = io.space_fields(io.read_json(args.space))
    report = validate_pairs(dist, cfg.tolerance)
    if not report.passed:
        raise io.InputError(f"space: {report.violations[0].describe(labels)}")
    try:
        m = minimal_coefficient(dist)
    except NoFiniteCoefficientError as e:
        raise io.InputError(str(e)) from None
    triple = argmax_coefficient(dist)
    return 0, {"minimal_coefficient": m, "attained_at": None if triple is None else [labels[i] for i in triple]}


def _space_and_map(args):
    space = io.load_space(args.space)
    return space, io.load_map(space, args.map)


def cmd_certify(args, cfg: RunConfig) -> tuple[int, dict]:
    space, smap = _space_and_map(args)
    suite = io.load_suite(args.suite)
    warnings = []
    member = scaled_ratio_membership(suite.j.k, space.coefficient)
    if not member.member:
        warnings.append(f"suite may not be a simulation function for s = {space.coefficient!r}: "
                        f"{member.justification}")
    try:
        cert = certify(space, smap, suite, args.theorem, cfg.tolerance)
    except SpaceError as e:
        raise io.InputError(str(e)) from None
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return (0 if cert.certified else 1), {"warnings": warnings, "certificate": cert.to_dict()}


def cmd_iterate(args, cfg: RunConfig) -> tuple[int, dict]:
    space, smap = _space_and_map(args)
    if args.seed not in space:
        raise io.InputError(f"unknown seed {args.seed!r}")
    if args.max_steps is not None and args.max_steps < 1:
        raise io.InputError("--max-steps must be >= 1")
    try:
        traj = picard_iterate(space, smap, args.seed, args.max_steps)
    except IterationLimitError as e:
        raise io.InputError(str(e)) from None
    return (1 if isinstance(traj.outcome, Cycle) else 0), traj.to_dict()


def cmd_fixed_points(args, cfg: RunConfig) -> tuple[int, dict]:
    space, smap = _space_and_map(args)
    cert = None
    if args.suite:
        cert = certify(space, smap, io.load_suite(args.suite), args.theorem, cfg.tolerance)
    rep = enumerate_fixed_points(space, smap, cert)
    return (0 if rep.unique else 1), rep.to_dict()


def cmd_demo(args, cfg: RunConfig) -> tuple[int, dict]:
    rep = run_demo(args.example)
    return (0 if rep["claim_holds"] else 1), rep


COMMANDS = {
    "validate": cmd_validate,
    "coefficient": cmd_coefficient,
    "certify": cmd_certify,
    "iterate": cmd_iterate,
    "fixed-points": cmd_fixed_points,
    "demo": cmd_demo,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="table")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="significant digits for printed numbers")
    common.add_argument("--tolerance", default=None,
                        help=f"comparison tolerance (default 1e-9, env {ENV_TOLERANCE})")

    p = _Parser(prog="bmfp", description="Finite b-metric spaces: validation, contraction certificates, "
                                         "Picard iteration.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", parents=[common], help="check the b-metric axioms")
    v.add_argument("space")
    v.add_argument("--coefficient", default=None, help="override the declared coefficient")

    c = sub.add_parser("coefficient", parents=[common], help="least admissible coefficient")
    c.add_argument("space")

    ce = sub.add_parser("certify", parents=[common], help="certify a contraction condition pairwise")
    ce.add_argument("space")
    ce.add_argument("map")
    ce.add_argument("suite")
    ce.add_argument("--theorem", choices=["basic", "generalized"], default="basic")

    it = sub.add_parser("iterate", parents=[common], help="Picard orbit from a seed")
    it.add_argument("space")
    it.add_argument("map")
    it.add_argument("--seed", required=True)
    it.add_argument("--max-steps", type=int, default=None)

    fp = sub.add_parser("fixed-points", parents=[common], help="list all fixed points")
    fp.add_argument("space")
    fp.add_argument("map")
    fp.add_argument("--suite", default=None, help="also compare against a certificate for this suite")
    fp.add_argument("--theorem", choices=["basic", "generalized"], default="basic")

    d = sub.add_parser("demo", parents=[common], help="run an embedded worked example")
    d.add_argument("example", choices=["A", "B", "a", "b"])
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.precision < 1:
            raise io.InputError("--precision must be >= 1")
        cfg = RunConfig(args.command, args.format, args.precision, _tolerance(args.tolerance))
        code, result = COMMANDS[args.command](args, cfg)
    except (io.InputError, SpaceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(to_json(result, cfg.precision))
    else:
        print(render_table(args.command, result, cfg.precision))
    return code


if __name__ == "__main__":
    sys.exit(main())
