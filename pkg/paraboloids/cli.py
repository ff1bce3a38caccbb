"""Command-line front end: ``paraboloids {project,figure,oracle-check,converge,examples}``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from ._checkers import Validator
from ._errors import DimensionError, PreconditionError, RootFindingError, ValidatorError
from .core import PointXXR, ProblemParams
from .cross import convergence_report
from .intervals import NumberLine
from .oracle import oracle_check
from .proj_c import project_c
from .proj_tilde import project_tilde, sample_members

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# Worked projections onto the saddle z = (x² − y²)/10 (α = 5, β = 1).
EXAMPLE_ALPHA = 5.0
EXAMPLE_BETA = 1.0
EXAMPLE_POINTS = (
    (2.0, -3.0, 4.0),
    (0.0, -3.0, 3.0),
    (0.0, math.sqrt(32.0), 6.0),
    (0.0, 0.0, 6.0),
    (0.0, 0.0, 4.0),
)

_RATIO_LINE = NumberLine.include_from_floats(0.0, 1.0, start_inclusive=False, end_inclusive=False)


def _fmt(value: float) -> str:
    return repr(float(value))


def _read_point(text: str) -> PointXXR:
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return PointXXR.from_json(text)


def _params(args, n: int) -> ProblemParams:
    overrides = {
        key: value
        for key, value in (("tol_feas", args.tol_feas), ("tol_root", args.tol_root), ("eps_case", args.eps_case))
        if value is not None
    }
    return ProblemParams(alpha=args.alpha, beta=args.beta, n=n, **overrides)


def _example_outcomes():
    params = ProblemParams(alpha=EXAMPLE_ALPHA, beta=EXAMPLE_BETA, n=1)
    for u, v, gamma in EXAMPLE_POINTS:
        p0 = PointXXR([u], [v], gamma)
        yield p0, project_tilde(p0, params)


def cmd_project(args) -> int:
    p0 = _read_point(args.point)
    params = _params(args, p0.n)
    samples = None if args.samples is None else Validator.positive_int(False, args.samples, "samples")
    project = project_c if args.space == "c" else project_tilde
    outcome = project(p0, params)
    print(json.dumps(outcome.to_dict(samples=samples, verbose=args.verbose)))
    return EXIT_OK


def cmd_figure(args) -> int:
    grid = Validator.at_least_int(2, args.grid, "grid")
    extent = Validator.positive_float(False, args.extent, "extent")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    axis = np.linspace(-extent, extent, grid)
    with (out / "mesh.csv").open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["x", "y", "z"])
        for x in axis:
            for y in axis:
                writer.writerow([_fmt(x), _fmt(y), _fmt((x * x - y * y) / (2 * EXAMPLE_ALPHA))])

    with (out / "segments.csv").open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["qx", "qy", "qz", "px", "py", "pz", "case"])
        for p0, outcome in _example_outcomes():
            for member in sample_members(outcome.projection_set, 2):
                writer.writerow(
                    [
                        *(_fmt(c) for c in (p0.x[0], p0.y[0], p0.gamma)),
                        *(_fmt(c) for c in (member.x[0], member.y[0], member.gamma)),
                        str(outcome.case_label),
                    ],
                )
    logger.info("wrote %s and %s", out / "mesh.csv", out / "segments.csv")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    checks = oracle_check(args.trials, args.seed, args.n, args.grid)
    worst = max(checks, key=lambda c: abs(c.discrepancy))
    failures = [c.trial for c in checks if not c.passed]
    report = {
        "trials": len(checks),
        "max_discrepancy": abs(worst.discrepancy),
        "worst_trial": worst.trial,
        "failures": failures,
    }
    print(json.dumps(report))
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def cmd_converge(args) -> int:
    p0 = _read_point(args.point)
    params = ProblemParams(alpha=args.alpha_start, beta=args.beta, n=p0.n)
    ratio = Validator(number_line=_RATIO_LINE)(args.alpha_ratio, "alpha-ratio")
    steps = Validator.positive_int(False, args.steps, "steps")
    alphas = [args.alpha_start * ratio**k for k in range(steps)]
    rows = convergence_report(p0, alphas, params, space=args.space)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["alpha", "max_dist", "case_label", "flag"])
    for row in rows:
        writer.writerow([_fmt(row.alpha), _fmt(row.max_dist), row.case_label, row.flag])
    return EXIT_OK


def cmd_examples(args) -> int:  # noqa: ARG001
    for p0, outcome in _example_outcomes():
        print(json.dumps({"query": p0.to_dict(), **outcome.to_dict(samples=2)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paraboloids",
        description="Projections onto rectangular hyperbolic paraboloids.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level on stderr (default: WARNING)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    project = sub.add_parser("project", help="Project a point and print the outcome as JSON")
    project.add_argument("--alpha", type=float, required=True, help="Constraint scale, non-zero")
    project.add_argument("--beta", type=float, default=1.0, help="Weight of the gamma-axis, positive")
    project.add_argument("--space", choices=["c", "tilde"], required=True, help="Bilinear (c) or standard form")
    project.add_argument("--point", required=True, help='JSON point {"x":[..],"y":[..],"gamma":..} or @file')
    project.add_argument("--samples", type=int, default=None, help="Include this many sampled members")
    project.add_argument("--tol-feas", type=float, default=None)
    project.add_argument("--tol-root", type=float, default=None)
    project.add_argument("--eps-case", type=float, default=None)
    project.add_argument("--verbose", action="store_true", help="Include the root-finding report")
    project.set_defaults(func=cmd_project)

    figure = sub.add_parser("figure", help="Write mesh and projection segments of the worked examples as CSV")
    figure.add_argument("--out", required=True, help="Output directory")
    figure.add_argument("--grid", type=int, default=41, help="Mesh points per axis")
    figure.add_argument("--extent", type=float, default=6.0, help="Mesh covers [-extent, extent]^2")
    figure.set_defaults(func=cmd_figure)

    check = sub.add_parser("oracle-check", help="Compare closed-form and brute-force distances on random points")
    check.add_argument("--trials", type=int, default=100)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--n", type=int, default=1)
    check.add_argument("--grid", type=int, default=1000)
    check.set_defaults(func=cmd_oracle_check)

    converge = sub.add_parser("converge", help="Distances between projections onto C_alpha and onto the cross")
    converge.add_argument("--point", required=True, help="JSON point or @file")
    converge.add_argument("--alpha-start", type=float, default=0.5)
    converge.add_argument("--alpha-ratio", type=float, default=0.5)
    converge.add_argument("--steps", type=int, default=20)
    converge.add_argument("--beta", type=float, default=1.0)
    converge.add_argument("--space", choices=["c", "tilde"], default="c")
    converge.set_defaults(func=cmd_converge)

    examples = sub.add_parser("examples", help="Print the worked projections as JSON lines")
    examples.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except ValidatorError as e:
        details = "; ".join(str(err) for err in e.exceptions)
        print(f"error: {e.message}: {details}", file=sys.stderr)
    except (PreconditionError, DimensionError, RootFindingError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE
