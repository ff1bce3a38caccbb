"""
Exact (possibly set-valued) projection onto C̃_α = {(u, v, γ) : ‖u‖² − ‖v‖² = 2αγ} in the β-weighted norm.

The query (u₀, v₀, γ₀) is dispatched on which of its blocks vanish:

    a    u₀ ≠ 0, v₀ ≠ 0   unique point (u₀/(1+λ), v₀/(1−λ), γ₀+λα/β²), λ the root of the quintic
    b    u₀ = 0, v₀ ≠ 0   a point from the cubic g₁ when g₁(−1) < 0, otherwise a sphere in the u-block
    c    u₀ ≠ 0, v₀ = 0   the mirror image of b, through g₂ and a sphere in the v-block
    d    u₀ = 0, v₀ = 0   a sphere in the u-block, the origin, or a sphere in the v-block, depending on αγ₀
"""

from __future__ import annotations

import logging
import math
from enum import StrEnum
from typing import Any, Self

import numpy as np
from attrs import field, frozen

from ._checkers import Validator
from .core import PointXXR, ProblemParams, check_dimension, residual_Ctilde, weighted_distance, weighted_norm
from .rootfind import RootReport, cubic_g1, cubic_g2, solve_cubic_g1, solve_cubic_g2, solve_quintic_norms
from .transform import SQRT2

logger = logging.getLogger(__name__)

# Margins this close to zero, relative to the size of their terms, give a sphere of radius 0.
_COLLAPSE_ULPS = 4 * np.finfo(float).eps


class SetKind(StrEnum):
    SINGLETON = "singleton"
    SPHERE_U = "sphere_u"
    SPHERE_V = "sphere_v"
    SPHERE_DIAG_PLUS = "sphere_diag_plus"
    SPHERE_DIAG_MINUS = "sphere_diag_minus"


class CaseLabel(StrEnum):
    A = "a"
    B_A = "b-a"
    B_B = "b-b"
    C_A = "c-a"
    C_B = "c-b"
    D_A = "d-a"
    D_B = "d-b"
    D_C = "d-c"


def _free_offset(kind: SetKind, w: np.ndarray) -> PointXXR:
    zeros = np.zeros_like(w)
    match kind:
        case SetKind.SPHERE_U:
            return PointXXR(w, zeros, 0.0)
        case SetKind.SPHERE_V:
            return PointXXR(zeros, w, 0.0)
        case SetKind.SPHERE_DIAG_PLUS:
            return PointXXR(w / SQRT2, w / SQRT2, 0.0)
        case SetKind.SPHERE_DIAG_MINUS:
            return PointXXR(w / SQRT2, -w / SQRT2, 0.0)
    msg = f"{kind} has no free block"
    raise ValueError(msg)


@frozen
class ProjectionSet:
    """
    A projection: a single point, or a sphere {point + offset(w) : ‖w‖ = radius}.

    For `sphere_u` the offset is (w, 0, 0) and for `sphere_v` it is (0, w, 0); the diagonal kinds, used in bilinear
    coordinates, have offsets (w/√2, ±w/√2, 0). The free block of `point` is stored as zero. A sphere of radius 0 is
    never stored; use `sphere` to build sphere sets.
    """

    kind: SetKind = field(converter=SetKind)
    point: PointXXR
    radius: float = field(default=0.0, converter=float)

    def __attrs_post_init__(self):
        if self.kind is SetKind.SINGLETON and self.radius != 0:
            msg = f"A singleton has radius 0, got {self.radius}"
            raise ValueError(msg)
        if self.kind is not SetKind.SINGLETON and not self.radius > 0:
            msg = f"A sphere needs a positive radius, got {self.radius}"
            raise ValueError(msg)

    @classmethod
    def singleton(cls, point: PointXXR) -> Self:
        return cls(SetKind.SINGLETON, point)

    @classmethod
    def sphere(cls, kind: SetKind, base: PointXXR, radius: float) -> Self:
        """A sphere around `base`, or the singleton {base} when `radius` is 0."""
        if radius == 0:
            return cls.singleton(base)
        return cls(kind, base, radius)

    @property
    def is_singleton(self) -> bool:
        return self.kind is SetKind.SINGLETON

    def member(self, w) -> PointXXR:
        """The member with free block `w`; `w` is rescaled to the radius of the sphere."""
        if self.is_singleton:
            return self.point
        w = np.asarray(w, dtype=float)
        norm = np.linalg.norm(w)
        if norm == 0:
            msg = "The free block w of a sphere member must be non-zero"
            raise ValueError(msg)
        return self.point + _free_offset(self.kind, self.radius * w / norm)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": str(self.kind),
            "point": self.point.to_dict(),
            "radius": None if self.is_singleton else self.radius,
        }


def sample_members(s: ProjectionSet, k: int) -> list[PointXXR]:
    """
    Deterministic members of a projection set.

    A singleton gives its point once. A sphere gives `k` members whose free block is the radius times +e₁, −e₁, +e₂,
    −e₂, ..., cycling through the basis once all 2n directions are used.

    Parameters
    ----------
    s: ProjectionSet
    k: int
        Number of members, at least 1.

    Returns
    -------
    list[PointXXR]
    """
    Validator.positive_int(False, k, "k")
    if s.is_singleton:
        return [s.point]
    n = s.point.n
    members = []
    for i in range(k):
        w = np.zeros(n)
        w[(i // 2) % n] = 1.0 if i % 2 == 0 else -1.0
        members.append(s.member(w))
    return members


def distance_to_set(point: PointXXR, s: ProjectionSet, params: ProblemParams) -> float:
    """
    Exact β-weighted distance from `point` to the nearest member of `s`.

    For the query a sphere set was computed from, every member is at this distance.
    """
    check_dimension(point, params)
    if s.is_singleton:
        return weighted_distance(point, s.point, params)
    d = point - s.point
    match s.kind:
        case SetKind.SPHERE_U:
            along, across = d.x, d.y
        case SetKind.SPHERE_V:
            along, across = d.y, d.x
        case SetKind.SPHERE_DIAG_PLUS:
            along, across = (d.x + d.y) / SQRT2, (d.y - d.x) / SQRT2
        case SetKind.SPHERE_DIAG_MINUS:
            along, across = (d.x - d.y) / SQRT2, (d.x + d.y) / SQRT2
    radial = np.linalg.norm(along) - s.radius
    return math.sqrt(radial**2 + float(np.dot(across, across)) + (params.beta * d.gamma) ** 2)


@frozen
class ProjectionOutcome:
    """
    The projection of a query point together with how it was obtained.

    Attributes
    ----------
    projection_set: ProjectionSet
    multiplier: float | None
        The Lagrange multiplier λ of the returned members, None when it is not determined.
    case_label: CaseLabel
        The branch of the case analysis that produced the set.
    distance: float
        β-weighted distance from the query to every member.
    root: RootReport | None
        The scalar solve, for branches that need one.
    """

    projection_set: ProjectionSet
    multiplier: float | None
    case_label: CaseLabel = field(converter=CaseLabel)
    distance: float
    root: RootReport | None = None

    def to_dict(self, samples: int | None = None, verbose: bool = False) -> dict[str, Any]:
        """JSON form; `samples` adds that many sampled members, `verbose` adds the root report."""
        data = self.projection_set.to_dict()
        data.update(
            {"lambda": self.multiplier, "case": str(self.case_label), "distance": self.distance},
        )
        if samples is not None:
            data["members"] = [m.to_dict() for m in sample_members(self.projection_set, samples)]
        if verbose and self.root is not None:
            data["root"] = self.root.to_dict()
        return data


def zero_blocks(p0: PointXXR, params: ProblemParams) -> tuple[bool, bool]:
    """Whether the first and the second block of `p0` count as zero, relative to the size of `p0`."""
    threshold = params.eps_case * (1 + weighted_norm(p0, params))
    return bool(np.linalg.norm(p0.x) <= threshold), bool(np.linalg.norm(p0.y) <= threshold)


def _radius(margin: float, scale: float) -> float:
    if margin <= _COLLAPSE_ULPS * scale:
        return 0.0
    return math.sqrt(max(0.0, margin))


def project_tilde(p0: PointXXR, params: ProblemParams) -> ProjectionOutcome:
    """
    Project `p0` onto C̃_α.

    Parameters
    ----------
    p0: PointXXR
        The query (u₀, v₀, γ₀).
    params: ProblemParams

    Returns
    -------
    ProjectionOutcome

    Raises
    ------
    DimensionError
        If `p0` does not match `params.n`.
    RootFindingError
        If a multiplier equation cannot be solved.
    """
    check_dimension(p0, params)
    u_zero, v_zero = zero_blocks(p0, params)
    u0, v0, gamma0 = p0.u, p0.v, p0.gamma
    alpha, shift = params.alpha, params.shift
    a, b = float(np.dot(u0, u0)), float(np.dot(v0, v0))
    zeros = np.zeros(params.n)
    root = None

    if not u_zero and not v_zero:
        root = solve_quintic_norms(a, b, params, gamma0)
        lam, label = root.lam, CaseLabel.A
        s = ProjectionSet.singleton(PointXXR(u0 / (1 + lam), v0 / (1 - lam), gamma0 + lam * shift))

    elif u_zero and not v_zero:
        margin = cubic_g1(-1.0, b, params, gamma0)
        if margin < 0:
            root = solve_cubic_g1(b, params, gamma0)
            lam, label = root.lam, CaseLabel.B_A
            s = ProjectionSet.singleton(PointXXR(zeros, v0 / (1 - lam), gamma0 + lam * shift))
        else:
            lam, label = -1.0, CaseLabel.B_B
            radius = _radius(margin, b / 4 + abs(2 * alpha * shift) + abs(2 * alpha * gamma0))
            s = ProjectionSet.sphere(SetKind.SPHERE_U, PointXXR(zeros, v0 / 2, gamma0 - shift), radius)

    elif v_zero and not u_zero:
        margin = cubic_g2(1.0, a, params, gamma0)
        if margin < 0:
            root = solve_cubic_g2(a, params, gamma0)
            lam, label = root.lam, CaseLabel.C_A
            s = ProjectionSet.singleton(PointXXR(u0 / (1 + lam), zeros, gamma0 + lam * shift))
        else:
            lam, label = 1.0, CaseLabel.C_B
            radius = _radius(margin, a / 4 + abs(2 * alpha * shift) + abs(2 * alpha * gamma0))
            s = ProjectionSet.sphere(SetKind.SPHERE_V, PointXXR(u0 / 2, zeros, gamma0 + shift), radius)

    else:
        scale = abs(2 * alpha * gamma0) + abs(2 * alpha * shift)
        margin_u, margin_v = 2 * alpha * (gamma0 - shift), -2 * alpha * (gamma0 + shift)
        if margin_u > 0:
            lam, label = -1.0, CaseLabel.D_A
            s = ProjectionSet.sphere(SetKind.SPHERE_U, PointXXR(zeros, zeros, gamma0 - shift), _radius(margin_u, scale))
        elif margin_v > 0:
            lam, label = 1.0, CaseLabel.D_C
            s = ProjectionSet.sphere(SetKind.SPHERE_V, PointXXR(zeros, zeros, gamma0 + shift), _radius(margin_v, scale))
        else:
            lam, label = -gamma0 / shift, CaseLabel.D_B
            s = ProjectionSet.singleton(PointXXR(zeros, zeros, 0.0))

    logger.debug("case %s for %s: %s (radius %g)", label, p0, s.kind, s.radius)
    return ProjectionOutcome(s, lam, label, distance_to_set(p0, s, params), root)


def check_kkt(p0: PointXXR, candidate: PointXXR, lam: float, params: ProblemParams) -> float:
    """
    Largest absolute residual of the optimality system

        (1+λ)u = u₀,   (1−λ)v = v₀,   β²(γ−γ₀) = λα,   ‖u‖² − ‖v‖² = 2αγ.

    Returns
    -------
    float
    """
    check_dimension(p0, params)
    check_dimension(candidate, params)
    residuals = np.concatenate(
        (
            (1 + lam) * candidate.u - p0.u,
            (1 - lam) * candidate.v - p0.v,
            [params.beta**2 * (candidate.gamma - p0.gamma) - lam * params.alpha, residual_Ctilde(candidate, params)],
        ),
    )
    return float(np.max(np.abs(residuals)))


def members_equidistant(p0: PointXXR, s: ProjectionSet, params: ProblemParams, k: int = 8, tol: float = 1e-10) -> bool:
    """Whether `k` sampled members of `s` all lie at the same β-weighted distance from `p0`."""
    distances = [weighted_distance(p0, m, params) for m in sample_members(s, k)]
    return max(distances) - min(distances) <= tol * (1 + max(distances))
