"""
Brute-force projection onto C̃_α, independent of the multiplier equations.

Only the norms of the blocks of a projection matter: its blocks are non-negative multiples of the blocks of the query.
With r_u = s‖u₀‖ and r_v = t‖v₀‖ (or r_u = s, r_v = t for a zero block) the constraint fixes
γ = (r_u² − r_v²)/(2α), leaving

    f(s, t) = (r_u − ‖u₀‖)² + (r_v − ‖v₀‖)² + β²(γ − γ₀)²

to be minimised over s, t ≥ 0. This is done on a grid over [0, S_max]², followed by golden-section refinement.
"""

from __future__ import annotations

import logging
import math
from typing import Any

import numpy as np
from attrs import frozen

from ._checkers import Validator
from ._errors import PreconditionError
from .core import PointXXR, ProblemParams, check_dimension, weighted_norm
from .proj_tilde import project_tilde, zero_blocks

logger = logging.getLogger(__name__)

MIN_GRID = 100
S_MAX_CAP = 1e3
REFINE_ROUNDS = 60
SLACK_FACTOR = 5.0
_CHUNK = 256
_INV_PHI = (math.sqrt(5) - 1) / 2


@frozen
class OracleResult:
    """
    Minimiser of the reduced problem.

    Attributes
    ----------
    s_star, t_star: float
        Scalings of the two blocks; for a zero block the norm of that block of the minimiser.
    gamma_star: float
    distance: float
        β-weighted distance from the query to the minimiser.
    grid_steps: int
        Number of grid intervals per axis.
    refine_iterations: int
        Golden-section rounds per refinement.
    tolerance: float
        Slack within which `distance` is certified to match the true distance.
    s_max: float
        Upper end of the search box.
    on_boundary: bool
        Whether the minimiser lies on the upper edge of the search box.
    """

    s_star: float
    t_star: float
    gamma_star: float
    distance: float
    grid_steps: int
    refine_iterations: int
    tolerance: float
    s_max: float
    on_boundary: bool = False

    def reconstruct(self, p0: PointXXR, params: ProblemParams) -> PointXXR:
        """The minimiser as a point of C̃_α."""
        u_zero, v_zero = zero_blocks(p0, params)
        return PointXXR(
            _block(p0.u, self.s_star, u_zero),
            _block(p0.v, self.t_star, v_zero),
            self.gamma_star,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "s_star": self.s_star,
            "t_star": self.t_star,
            "gamma_star": self.gamma_star,
            "distance": self.distance,
            "grid_steps": self.grid_steps,
            "refine_iterations": self.refine_iterations,
            "tolerance": self.tolerance,
            "s_max": self.s_max,
            "on_boundary": self.on_boundary,
        }


def _block(block: np.ndarray, scaling: float, is_zero: bool) -> np.ndarray:
    if not is_zero:
        return scaling * block
    direction = np.zeros_like(block)
    direction[0] = 1.0
    return scaling * direction


class _Reduced:
    """f(s, t) for one query point, vectorised over s and t."""

    def __init__(self, p0: PointXXR, params: ProblemParams):
        u_zero, v_zero = zero_blocks(p0, params)
        self.norm_u = float(np.linalg.norm(p0.u))
        self.norm_v = float(np.linalg.norm(p0.v))
        self.scale_u = 1.0 if u_zero else self.norm_u
        self.scale_v = 1.0 if v_zero else self.norm_v
        self.gamma0 = p0.gamma
        self.alpha = params.alpha
        self.beta = params.beta

    def gamma(self, s, t):
        r_u, r_v = s * self.scale_u, t * self.scale_v
        return (r_u * r_u - r_v * r_v) / (2 * self.alpha)

    def __call__(self, s, t):
        r_u, r_v = s * self.scale_u, t * self.scale_v
        gamma = (r_u * r_u - r_v * r_v) / (2 * self.alpha)
        return (r_u - self.norm_u) ** 2 + (r_v - self.norm_v) ** 2 + (self.beta * (gamma - self.gamma0)) ** 2


def _golden(func, lo, hi, rounds: int = REFINE_ROUNDS):
    """
    Golden-section search for minima of `func` on [lo, hi], elementwise over arrays of brackets.

    Returns
    -------
    tuple[numpy.ndarray, numpy.ndarray]
        The best points found and their values.
    """
    lo, hi = np.array(lo, dtype=float), np.array(hi, dtype=float)
    for _ in range(rounds):
        c = hi - _INV_PHI * (hi - lo)
        d = lo + _INV_PHI * (hi - lo)
        left = func(c) <= func(d)
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
    x = (lo + hi) / 2
    return x, func(x)


def search_box(p0: PointXXR, params: ProblemParams) -> float:
    """
    S_max: the scalings of the blocks of every projection of `p0` are at most this large.

    The origin lies on C̃_α, so a projection is at most ‖p0‖ away from `p0` and has norm at most 2‖p0‖.
    """
    u_zero, v_zero = zero_blocks(p0, params)
    norms = [np.linalg.norm(block) for block, zero in ((p0.u, u_zero), (p0.v, v_zero)) if not zero]
    smallest = min([1.0, *norms])
    return min(S_MAX_CAP, 2 + 2 * weighted_norm(p0, params) / smallest)


def oracle_project_tilde(p0: PointXXR, params: ProblemParams, grid: int = 2000) -> OracleResult:
    """
    Project `p0` onto C̃_α by grid search over the reduced problem.

    Parameters
    ----------
    p0: PointXXR
    params: ProblemParams
    grid: int
        Number of grid intervals per axis, at least 100.

    Returns
    -------
    OracleResult

    Raises
    ------
    PreconditionError
        If `grid` is smaller than 100.
    """
    check_dimension(p0, params)
    grid = Validator.is_int(grid, "grid")
    if grid < MIN_GRID:
        msg = f"grid must be at least {MIN_GRID}, got {grid}"
        raise PreconditionError(msg)

    f = _Reduced(p0, params)
    s_max = search_box(p0, params)
    h = s_max / grid
    axis = np.linspace(0.0, s_max, grid + 1)

    # Column-wise minima over s, one column per value of t.
    column_rows = np.empty(grid + 1, dtype=int)
    column_min = np.empty(grid + 1)
    for start in range(0, grid + 1, _CHUNK):
        stop = min(start + _CHUNK, grid + 1)
        values = f(axis[:, None], axis[None, start:stop])
        rows = np.argmin(values, axis=0)
        column_rows[start:stop] = rows
        column_min[start:stop] = values[rows, np.arange(stop - start)]

    ties = np.flatnonzero(column_min == column_min.min())
    j_grid = ties[np.argmin(column_rows[ties])]
    candidates = [(column_min[j_grid], axis[column_rows[j_grid]], axis[j_grid])]

    # Refine every column around its best row.
    lo = axis[np.maximum(column_rows - 1, 0)]
    hi = axis[np.minimum(column_rows + 1, grid)]
    s_refined, profile = _golden(lambda s: f(s, axis), lo, hi)
    better = profile < column_min
    s_refined = np.where(better, s_refined, axis[column_rows])
    profile = np.where(better, profile, column_min)
    j_star = int(np.argmin(profile))
    candidates.append((profile[j_star], s_refined[j_star], axis[j_star]))

    # Refine t around the best column, minimising over s for every t.
    neighbours = slice(max(j_star - 1, 0), min(j_star + 2, grid + 1))
    s_lo = max(0.0, float(s_refined[neighbours].min()) - h)
    s_hi = min(s_max, float(s_refined[neighbours].max()) + h)

    def best_over_s(t):
        t = np.asarray(t, dtype=float)
        return _golden(lambda s: f(s, t), np.full(t.shape, s_lo), np.full(t.shape, s_hi))

    t_best, _ = _golden(lambda t: best_over_s(t)[1], axis[neighbours.start], axis[neighbours.stop - 1])
    s_best, f_best = best_over_s(t_best)
    candidates.append((float(f_best), float(s_best), float(t_best)))

    value, s_star, t_star = min(candidates, key=lambda c: c[0])
    on_boundary = bool(max(s_star, t_star) >= s_max - h)
    if on_boundary:
        logger.warning(
            "oracle minimiser (s, t) = (%g, %g) is on the edge of the search box [0, %g]",
            s_star,
            t_star,
            s_max,
        )
    logger.debug("oracle grid %d over [0, %g]^2, h = %g, f* = %g", grid, s_max, h, value)
    return OracleResult(
        s_star=float(s_star),
        t_star=float(t_star),
        gamma_star=float(f.gamma(s_star, t_star)),
        distance=math.sqrt(max(0.0, float(value))),
        grid_steps=grid,
        refine_iterations=REFINE_ROUNDS,
        tolerance=SLACK_FACTOR * h * (1 + weighted_norm(p0, params)),
        s_max=s_max,
        on_boundary=on_boundary,
    )


def oracle_distance(p0: PointXXR, params: ProblemParams, grid: int = 2000) -> float:
    return oracle_project_tilde(p0, params, grid).distance


@frozen
class OracleCheck:
    trial: int
    params: ProblemParams
    point: PointXXR
    closed_form: float
    oracle: float
    tolerance: float

    @property
    def discrepancy(self) -> float:
        return self.closed_form - self.oracle

    @property
    def passed(self) -> bool:
        return abs(self.discrepancy) <= self.tolerance


def oracle_check(trials: int, seed: int, n: int, grid: int = 1000) -> list[OracleCheck]:
    """
    Compare closed-form and brute-force distances on random queries.

    Queries have standard normal entries; α = ±U(0.5, 5) and β = U(0.5, 2).

    Raises
    ------
    ValidatorError
        If `trials` or `n` is not a positive integer.
    """
    trials = Validator.positive_int(False, trials, "trials")
    n = Validator.positive_int(False, n, "n")
    rng = np.random.default_rng(seed)
    checks = []
    for trial in range(trials):
        alpha = rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 5.0)
        params = ProblemParams(alpha=float(alpha), beta=float(rng.uniform(0.5, 2.0)), n=n)
        p0 = PointXXR(rng.standard_normal(n), rng.standard_normal(n), float(rng.standard_normal()))
        result = oracle_project_tilde(p0, params, grid)
        closed = project_tilde(p0, params).distance
        checks.append(OracleCheck(trial, params, p0, closed, result.distance, result.tolerance))
    return checks
