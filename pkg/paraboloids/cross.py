"""
Projection onto the limit sets of C_α and C̃_α as α → 0, the cross C = {⟨x, y⟩ = 0} and its standard form
C̃ = {‖u‖ = ‖v‖}, and the experiment comparing P_{C_α} with P_{C×ℝ} = P_C × Id for decreasing α.

The projection onto C̃ moves both blocks to the average norm m = (‖u₀‖ + ‖v₀‖)/2 along their own directions. A zero
block can point anywhere, which makes the projection a sphere of radius m in that block.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from typing import Any

import numpy as np
from attrs import frozen

from ._checkers import Validator
from ._errors import PreconditionError
from .core import PointXXR, ProblemParams, check_dimension
from .proj_c import image_of_set, project_c
from .proj_tilde import ProjectionSet, SetKind, distance_to_set, project_tilde, sample_members, zero_blocks
from .transform import apply_At

logger = logging.getLogger(__name__)

GAMMA_AXIS = "gamma-axis"


def project_cross_tilde(u0, v0, gamma: float = 0.0) -> ProjectionSet:
    """
    Project (u₀, v₀) onto C̃ = {‖u‖ = ‖v‖}; `gamma` is carried through unchanged.

    Returns
    -------
    ProjectionSet
        A singleton, or a `sphere_u`/`sphere_v` set when the corresponding block of the query is zero.
    """
    u0, v0 = np.asarray(u0, dtype=float), np.asarray(v0, dtype=float)
    norm_u, norm_v = float(np.linalg.norm(u0)), float(np.linalg.norm(v0))
    m = (norm_u + norm_v) / 2
    zeros = np.zeros_like(u0)
    if norm_u == 0 and norm_v == 0:
        return ProjectionSet.singleton(PointXXR(zeros, zeros, gamma))
    if norm_u == 0:
        return ProjectionSet.sphere(SetKind.SPHERE_U, PointXXR(zeros, v0 / 2, gamma), m)
    if norm_v == 0:
        return ProjectionSet.sphere(SetKind.SPHERE_V, PointXXR(u0 / 2, zeros, gamma), m)
    return ProjectionSet.singleton(PointXXR(m * u0 / norm_u, m * v0 / norm_v, gamma))


def project_cross(x0, y0, gamma: float = 0.0) -> ProjectionSet:
    """
    Project (x₀, y₀) onto the cross C = {⟨x, y⟩ = 0}; `gamma` is carried through unchanged.

    Returns
    -------
    ProjectionSet
        A singleton, or a diagonal sphere when x₀ = ±y₀ ≠ 0.
    """
    p_uv = apply_At(PointXXR(x0, y0, gamma))
    return image_of_set(project_cross_tilde(p_uv.u, p_uv.v, gamma))


@frozen
class ConvergenceRow:
    alpha: float
    max_dist: float
    case_label: str
    flag: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"alpha": self.alpha, "max_dist": self.max_dist, "case_label": self.case_label, "flag": self.flag}


def convergence_report(
    p0: PointXXR,
    alphas: Iterable[float],
    params: ProblemParams,
    space: str = "c",
    samples: int | None = None,
) -> list[ConvergenceRow]:
    """
    For each α, the largest distance from sampled members of P_{C_α}(p0) to the set P_{C×ℝ}(p0).

    Parameters
    ----------
    p0: PointXXR
    alphas: Iterable[float]
        Strictly positive, strictly decreasing.
    params: ProblemParams
        Everything except α, which is replaced by each entry of `alphas`.
    space: str
        "c" for C_α and the cross C, "tilde" for C̃_α and C̃.
    samples: int | None
        Members sampled from sphere outcomes, 2n by default.

    Returns
    -------
    list[ConvergenceRow]
        Rows of query points on the γ-axis (zero blocks, γ₀ ≠ 0) are flagged "gamma-axis": the projection of such
        a point does not converge to the point itself.

    Raises
    ------
    ValidatorError
        If an α is not strictly positive or `space` is unknown.
    PreconditionError
        If `alphas` is not strictly decreasing.
    """
    check_dimension(p0, params)
    Validator.one_of(("c", "tilde"), space, "space")
    alphas = [Validator.positive_float(False, alpha, "alpha") for alpha in alphas]
    if any(later >= earlier for earlier, later in zip(alphas, alphas[1:], strict=False)):
        msg = f"alphas must be strictly decreasing, got {alphas}"
        raise PreconditionError(msg)
    samples = samples or 2 * params.n

    if space == "c":
        project, limit = project_c, project_cross(p0.x, p0.y, p0.gamma)
        on_axis = all(zero_blocks(apply_At(p0), params))
    else:
        project, limit = project_tilde, project_cross_tilde(p0.u, p0.v, p0.gamma)
        on_axis = all(zero_blocks(p0, params))
    flag = GAMMA_AXIS if on_axis and p0.gamma != 0 else ""

    rows = []
    for alpha in alphas:
        outcome = project(p0, params.with_alpha(alpha))
        members = sample_members(outcome.projection_set, samples)
        max_dist = max(distance_to_set(m, limit, params) for m in members)
        rows.append(ConvergenceRow(alpha, max_dist, str(outcome.case_label), flag))
        logger.debug("alpha %g: case %s, max distance %g", alpha, outcome.case_label, max_dist)
    return rows


def liminf_witness(p: PointXXR, alpha: float, params: ProblemParams) -> PointXXR:
    """
    A point of C̃_α close to a point `p` of C̃ × ℝ.

    With ρ² = ‖u‖² + ‖v‖² > 0 and λ = 2αγ/ρ², the point (√(1+λ)·u, √(1−λ)·v, γ) lies on C̃_α within |λ|·ρ of `p`.
    For u = v = 0 the witness puts √|2αγ| into the first coordinate of one block.

    Raises
    ------
    PreconditionError
        If `p` is not on C̃ × ℝ, or |λ| ≥ 1.
    """
    check_dimension(p, params)
    norm_u_sq, norm_v_sq = float(np.dot(p.u, p.u)), float(np.dot(p.v, p.v))
    rho_sq = norm_u_sq + norm_v_sq
    if abs(norm_u_sq - norm_v_sq) > params.tol_feas * (1 + rho_sq):
        msg = f"Point is not on the cross: ‖u‖² = {norm_u_sq}, ‖v‖² = {norm_v_sq}"
        raise PreconditionError(msg)
    target = 2 * alpha * p.gamma
    if rho_sq == 0:
        w = np.zeros(params.n)
        w[0] = math.sqrt(abs(target))
        return PointXXR(w, p.v, p.gamma) if target >= 0 else PointXXR(p.u, w, p.gamma)
    lam = target / rho_sq
    if abs(lam) >= 1:
        msg = f"α = {alpha} is too large for a witness near this point (λ = {lam})"
        raise PreconditionError(msg)
    return PointXXR(math.sqrt(1 + lam) * p.u, math.sqrt(1 - lam) * p.v, p.gamma)
