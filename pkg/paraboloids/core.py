"""
Points of X×X×ℝ, problem parameters, the β-weighted norm and the residuals of the two constraint sets

    C_α = {(x, y, γ) : ⟨x, y⟩ = αγ}        and        C̃_α = {(u, v, γ) : ‖u‖² − ‖v‖² = 2αγ}.

The same point type carries bilinear coordinates (x, y, γ) and standard-form coordinates (u, v, γ); `u`/`v` are
aliases of `x`/`y`.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from typing import Any, Self

import numpy as np
from attrs import field, frozen

from ._checkers import Descriptor
from ._errors import DimensionError


def _as_vector(value) -> np.ndarray:
    vector = np.array(value, dtype=float, copy=True)
    if vector.ndim != 1:
        msg = f"Expected a 1-d vector, got an array with shape {vector.shape}"
        raise DimensionError(msg)
    if not np.all(np.isfinite(vector)):
        msg = "Point coordinates must be finite"
        raise ValueError(msg)
    vector.flags.writeable = False
    return vector


def _as_finite_float(value) -> float:
    value = float(value)
    if not math.isfinite(value):
        msg = f"gamma must be finite, got {value}"
        raise ValueError(msg)
    return value


@dataclass(frozen=True)
class ProblemParams:
    """
    Parameters of a projection problem.

    Attributes
    ----------
    alpha: float
        Scale of the constraint, any finite non-zero real.
    beta: float
        Weight of the γ-axis in the norm, strictly positive.
    n: int
        Dimension of each of the two vector blocks.
    tol_feas: float
        Tolerance on constraint residuals of returned points.
    tol_root: float
        Tolerance on the (relative) residual of the scalar multiplier equations.
    eps_case: float
        Relative tolerance used to decide that a block of the query point is zero.
    """

    alpha: float = Descriptor.non_zero_float()
    beta: float = Descriptor.positive_float(include_zero=False)
    n: int = Descriptor.at_least_int(1)
    tol_feas: float = Descriptor.positive_float(include_zero=False, default=1e-9)
    tol_root: float = Descriptor.positive_float(include_zero=False, default=1e-12)
    eps_case: float = Descriptor.positive_float(include_zero=False, default=1e-9)

    @property
    def shift(self) -> float:
        """The recurring quantity α/β²."""
        return self.alpha / self.beta**2

    def with_alpha(self, alpha: float) -> Self:
        return dataclasses.replace(self, alpha=alpha)

    def with_n(self, n: int) -> Self:
        return dataclasses.replace(self, n=n)

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """
        Build parameters from their JSON form, ``{"alpha": .., "beta": .., "n": ..}`` with optional tolerances.

        Raises
        ------
        ValueError
            For unknown keys.
        ValidatorError
            For invalid values.
        """
        known = {f.name for f in dataclasses.fields(cls)}
        if unknown := set(data) - known:
            msg = f"Unknown parameter(s): {', '.join(sorted(unknown))}"
            raise ValueError(msg)
        return cls(**data)


@frozen(eq=False)
class PointXXR:
    """A point (x, y, γ) of ℝⁿ×ℝⁿ×ℝ. The vectors are stored as read-only float arrays."""

    x: np.ndarray = field(converter=_as_vector)
    y: np.ndarray = field(converter=_as_vector)
    gamma: float = field(converter=_as_finite_float)

    def __attrs_post_init__(self):
        if self.x.shape != self.y.shape:
            msg = f"x and y must have equal length, got {self.x.shape[0]} and {self.y.shape[0]}"
            raise DimensionError(msg)

    @property
    def u(self) -> np.ndarray:
        return self.x

    @property
    def v(self) -> np.ndarray:
        return self.y

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @classmethod
    def zeros(cls, n: int, gamma: float = 0.0) -> Self:
        return cls(np.zeros(n), np.zeros(n), gamma)

    def swap(self) -> PointXXR:
        """Exchange the two vector blocks."""
        return PointXXR(self.y, self.x, self.gamma)

    def __add__(self, other: PointXXR) -> PointXXR:
        if not isinstance(other, PointXXR):
            return NotImplemented
        return PointXXR(self.x + other.x, self.y + other.y, self.gamma + other.gamma)

    def __sub__(self, other: PointXXR) -> PointXXR:
        if not isinstance(other, PointXXR):
            return NotImplemented
        return PointXXR(self.x - other.x, self.y - other.y, self.gamma - other.gamma)

    def __mul__(self, scalar: float) -> PointXXR:
        if not isinstance(scalar, (int, float, np.floating)):
            return NotImplemented
        return PointXXR(scalar * self.x, scalar * self.y, scalar * self.gamma)

    __rmul__ = __mul__

    def __neg__(self) -> PointXXR:
        return self * -1.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointXXR):
            return NotImplemented
        return bool(np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y) and self.gamma == other.gamma)

    __hash__ = None

    def allclose(self, other: PointXXR, rtol: float = 1e-9, atol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        return bool(
            np.allclose(self.x, other.x, rtol=rtol, atol=atol)
            and np.allclose(self.y, other.y, rtol=rtol, atol=atol)
            and math.isclose(self.gamma, other.gamma, rel_tol=rtol, abs_tol=atol)
        )

    def to_dict(self) -> dict[str, Any]:
        return {"x": self.x.tolist(), "y": self.y.tolist(), "gamma": self.gamma}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """
        Build a point from ``{"x": [...], "y": [...], "gamma": <real>}``.

        Raises
        ------
        ValueError
            If a key is missing or the values are not numeric.
        DimensionError
            If x and y have different lengths.
        """
        if not isinstance(data, dict):
            msg = f"A point must be a JSON object, not {type(data).__name__}"
            raise ValueError(msg)  # noqa: TRY004
        missing = [key for key in ("x", "y", "gamma") if key not in data]
        if missing:
            msg = f"Point is missing the field(s): {', '.join(missing)}"
            raise ValueError(msg)
        try:
            return cls(data["x"], data["y"], data["gamma"])
        except TypeError as e:
            msg = f"Point has non-numeric values: {data}"
            raise ValueError(msg) from e

    @classmethod
    def from_json(cls, text: str) -> Self:
        return cls.from_dict(json.loads(text))


def check_dimension(p: PointXXR, params: ProblemParams) -> None:
    """
    Raises
    ------
    DimensionError
        If the blocks of `p` do not have length `params.n`.
    """
    if p.n != params.n:
        msg = f"Point has blocks of length {p.n}, but the problem has n = {params.n}"
        raise DimensionError(msg)


def weighted_norm(p: PointXXR, params: ProblemParams) -> float:
    """
    The β-weighted norm sqrt(‖x‖² + ‖y‖² + β²γ²).

    Parameters
    ----------
    p: PointXXR
    params: ProblemParams

    Returns
    -------
    float

    Raises
    ------
    DimensionError
        If the point does not match `params.n`.
    """
    check_dimension(p, params)
    return float(np.linalg.norm(np.concatenate((p.x, p.y, [params.beta * p.gamma]))))


def weighted_distance(p: PointXXR, q: PointXXR, params: ProblemParams) -> float:
    check_dimension(q, params)
    return weighted_norm(p - q, params)


def objective(p0: PointXXR, candidate: PointXXR, params: ProblemParams) -> float:
    """Squared β-weighted distance, the function minimised by a projection."""
    return weighted_distance(p0, candidate, params) ** 2


def residual_C(p: PointXXR, params: ProblemParams) -> float:  # noqa: N802
    """⟨x, y⟩ − αγ, zero exactly on C_α."""
    check_dimension(p, params)
    return float(np.dot(p.x, p.y) - params.alpha * p.gamma)


def residual_Ctilde(p: PointXXR, params: ProblemParams) -> float:  # noqa: N802
    """‖u‖² − ‖v‖² − 2αγ, zero exactly on C̃_α."""
    check_dimension(p, params)
    return float(np.dot(p.u, p.u) - np.dot(p.v, p.v) - 2 * params.alpha * p.gamma)
