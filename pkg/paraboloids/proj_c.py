"""
Projection onto C_α = {(x, y, γ) : ⟨x, y⟩ = αγ}, obtained from the projection onto C̃_α by conjugation with A:

    P_{C_α} = A ∘ P_{C̃_α} ∘ Aᵀ.

Spheres in the u-block (v-block) of the standard form become spheres along the diagonal x = y (anti-diagonal
x = −y).
"""

from __future__ import annotations

from .core import PointXXR, ProblemParams, check_dimension
from .proj_tilde import ProjectionOutcome, ProjectionSet, SetKind, distance_to_set, project_tilde, zero_blocks
from .transform import apply_A, apply_At

_IMAGE_KIND = {
    SetKind.SINGLETON: SetKind.SINGLETON,
    SetKind.SPHERE_U: SetKind.SPHERE_DIAG_PLUS,
    SetKind.SPHERE_V: SetKind.SPHERE_DIAG_MINUS,
}


def image_of_set(s: ProjectionSet) -> ProjectionSet:
    """
    Map a projection set in standard-form coordinates to bilinear coordinates.

    Raises
    ------
    ValueError
        If `s` is already a diagonal sphere.
    """
    if s.kind not in _IMAGE_KIND:
        msg = f"{s.kind} is not a set in standard-form coordinates"
        raise ValueError(msg)
    if s.is_singleton:
        return ProjectionSet.singleton(apply_A(s.point))
    return ProjectionSet.sphere(_IMAGE_KIND[s.kind], apply_A(s.point), s.radius)


def dispatch_case_c(p0: PointXXR, params: ProblemParams) -> str:
    """
    Which case of the analysis applies to `p0`: "a" when x₀ ≠ ±y₀, "b" when x₀ = −y₀ ≠ 0, "c" when x₀ = y₀ ≠ 0 and
    "d" when x₀ = y₀ = 0. Equalities are decided with the same relative tolerance as the standard-form dispatch.
    """
    check_dimension(p0, params)
    u_zero, v_zero = zero_blocks(apply_At(p0), params)
    if u_zero and v_zero:
        return "d"
    if u_zero:
        return "b"
    if v_zero:
        return "c"
    return "a"


def project_c(p0: PointXXR, params: ProblemParams) -> ProjectionOutcome:
    """
    Project `p0` onto C_α.

    The outcome carries the multiplier and case label of the standard-form problem it was computed from.

    Raises
    ------
    DimensionError
        If `p0` does not match `params.n`.
    RootFindingError
        If a multiplier equation cannot be solved.
    """
    check_dimension(p0, params)
    tilde = project_tilde(apply_At(p0), params)
    s = image_of_set(tilde.projection_set)
    return ProjectionOutcome(s, tilde.multiplier, tilde.case_label, distance_to_set(p0, s, params), tilde.root)
