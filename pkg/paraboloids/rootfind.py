"""
Scalar equations for the Lagrange multiplier λ of the projection onto C̃_α and a bracketed solver for them.

With a = ‖u₀‖², b = ‖v₀‖², p = a − b, q = a + b and k = 2α²/β²:

    quintic   g(λ)  = a/(1+λ)² − b/(1−λ)² − kλ − 2αγ₀    strictly decreasing on ]−1, 1[
    cubic     g₁(λ) = b/(1−λ)² + kλ + 2αγ₀               strictly increasing on ]−∞, 1[
    cubic     g₂(λ) = a/(1+λ)² − kλ − 2αγ₀               strictly decreasing on ]−1, ∞[

The quintic is the rational form ((λ²+1)p − 2λq)/(1−λ²)² − kλ − 2αγ₀ with the two poles kept in separate terms.
Equations are never multiplied out into polynomials.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from typing import Any

import numpy as np
from attrs import frozen

from ._errors import BracketError, PreconditionError, RootFindingError
from .core import ProblemParams
from .intervals import MULTIPLIER_INTERVAL

logger = logging.getLogger(__name__)

BISECTION_WIDTH = 1e-13
NEWTON_STEPS = 5
MAX_ITERATIONS = 200
_POLE_OFFSETS = tuple(2.0**-k for k in range(1, 61))


@frozen
class RootReport:
    """
    Result of solving one of the multiplier equations.

    Attributes
    ----------
    lam: float
        The root λ.
    bracket_lo, bracket_hi: float
        The bracket the solver started from; `bracket_lo < lam < bracket_hi`.
    residual: float
        |g(λ)| divided by the sum of the absolute values of the terms of g at λ.
    iterations: int
        Number of bisection and Newton evaluations.
    """

    lam: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "lambda": self.lam,
            "bracket_lo": self.bracket_lo,
            "bracket_hi": self.bracket_hi,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _stiffness(params: ProblemParams) -> float:
    return 2 * params.alpha * params.shift


def _quintic_terms(lam, a, b, params, gamma0):
    return (
        a / ((1 + lam) * (1 + lam)),
        -b / ((1 - lam) * (1 - lam)),
        -_stiffness(params) * lam,
        -2 * params.alpha * gamma0,
    )


def _g1_terms(lam, b, params, gamma0):
    return b / ((1 - lam) * (1 - lam)), _stiffness(params) * lam, 2 * params.alpha * gamma0


def _g2_terms(lam, a, params, gamma0):
    return a / ((1 + lam) * (1 + lam)), -_stiffness(params) * lam, -2 * params.alpha * gamma0


def _total(terms):
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def _vectorised(terms_function, lam, *args):
    lam = np.asarray(lam, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        total = _total(terms_function(lam, *args))
    return float(total) if np.ndim(total) == 0 else total


def quintic_g(lam, p: float, q: float, params: ProblemParams, gamma0: float):
    """
    The quintic g at `lam` (a float or an array), for p = ‖u₀‖² − ‖v₀‖² and q = ‖u₀‖² + ‖v₀‖².

    Returns
    -------
    float | numpy.ndarray
    """
    return _vectorised(_quintic_terms, lam, (q + p) / 2, (q - p) / 2, params, gamma0)


def _quintic_slope(lam, a, b, params):
    lam = np.asarray(lam, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        slope = -2 * a / (1 + lam) ** 3 - 2 * b / (1 - lam) ** 3 - _stiffness(params)
    return float(slope) if np.ndim(slope) == 0 else slope


def quintic_g_prime(lam, p: float, q: float, params: ProblemParams, gamma0: float):  # noqa: ARG001
    return _quintic_slope(lam, (q + p) / 2, (q - p) / 2, params)


def cubic_g1(lam, v0_norm_sq: float, params: ProblemParams, gamma0: float):
    """The cubic g₁ at `lam` (a float or an array)."""
    return _vectorised(_g1_terms, lam, v0_norm_sq, params, gamma0)


def cubic_g1_prime(lam, v0_norm_sq: float, params: ProblemParams, gamma0: float):
    lam = np.asarray(lam, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        slope = 2 * v0_norm_sq / (1 - lam) ** 3 + _stiffness(params)
    return float(slope) if np.ndim(slope) == 0 else slope


def cubic_g2(lam, u0_norm_sq: float, params: ProblemParams, gamma0: float):
    """The cubic g₂ at `lam` (a float or an array)."""
    return _vectorised(_g2_terms, lam, u0_norm_sq, params, gamma0)


def cubic_g2_prime(lam, u0_norm_sq: float, params: ProblemParams, gamma0: float):
    lam = np.asarray(lam, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        slope = -2 * u0_norm_sq / (1 + lam) ** 3 - _stiffness(params)
    return float(slope) if np.ndim(slope) == 0 else slope


def _evaluator(terms_function, sign, *args) -> Callable[[float], tuple[float, float]]:
    """Turn a term function into λ -> (signed value, scale) with the signed value decreasing in λ."""

    def evaluate(lam: float) -> tuple[float, float]:
        terms = terms_function(lam, *args)
        return sign * _total(terms), sum(abs(t) for t in terms)

    return evaluate


def _near_pole(evaluate, pole: float, direction: float, want_positive: bool, name: str) -> tuple[float, float]:
    # Candidates pole + direction·2⁻ᵏ, from the interior outwards.
    for offset in _POLE_OFFSETS:
        candidate = pole + direction * offset
        if candidate == pole:
            break
        value, _ = evaluate(candidate)
        if math.isfinite(value) and ((value > 0) if want_positive else (value < 0)):
            return candidate, value
    msg = f"Could not bracket the root of {name} near the pole at {pole}"
    raise BracketError(msg)


def _relative(value: float, scale: float) -> float:
    if value == 0:
        return 0.0
    return abs(value) / scale


def _solve(evaluate, slope, lo: float, hi: float, params: ProblemParams, name: str) -> RootReport:
    """
    Find the root of a decreasing function on ]lo, hi[, given evaluate(lo) > 0 > evaluate(hi).

    Bisection to a width of `BISECTION_WIDTH`, a few Newton steps kept inside the bracket, then bisection again while
    the relative residual exceeds `params.tol_root`.
    """
    tol = params.tol_root
    bracket = (lo, hi)
    best = {"lam": math.nan, "value": math.nan, "residual": math.inf}
    iterations = 0

    def record(lam, value, scale):
        residual = _relative(value, scale)
        if MULTIPLIER_INTERVAL.check(lam) and residual < best["residual"]:
            best.update(lam=lam, value=value, residual=residual)

    for endpoint in (lo, hi):
        record(endpoint, *evaluate(endpoint))

    def bisect() -> bool:
        nonlocal lo, hi, iterations
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            return False
        value, scale = evaluate(mid)
        iterations += 1
        record(mid, value, scale)
        if value > 0:
            lo = mid
        elif value < 0:
            hi = mid
        else:
            lo = hi = mid
        return True

    while hi - lo > BISECTION_WIDTH and iterations < MAX_ITERATIONS and best["residual"] > 0:
        if not bisect():
            break

    lam, value = best["lam"], best["value"]
    for _ in range(NEWTON_STEPS):
        if best["residual"] == 0:
            break
        derivative = slope(lam)
        if derivative == 0 or not math.isfinite(derivative):
            break
        step = lam - value / derivative
        if step == lam or not lo < step < hi:
            break
        value, scale = evaluate(step)
        iterations += 1
        record(step, value, scale)
        lam = step
        if value > 0:
            lo = step
        elif value < 0:
            hi = step

    collapsed = False
    while best["residual"] > tol and iterations < MAX_ITERATIONS:
        if not bisect():
            collapsed = True
            break

    if best["residual"] > tol:
        if not collapsed and np.nextafter(lo, hi) < hi:
            msg = (
                f"{name} did not reach a relative residual of {tol} in {iterations} iterations "
                f"(best {best['residual']} at λ = {best['lam']})"
            )
            raise RootFindingError(msg)
        logger.warning(
            "%s: bracket collapsed to adjacent floats at λ = %r with relative residual %g > %g",
            name,
            best["lam"],
            best["residual"],
            tol,
        )

    logger.debug("%s: root %r in %r after %d iterations", name, best["lam"], bracket, iterations)
    return RootReport(
        lam=best["lam"],
        bracket_lo=bracket[0],
        bracket_hi=bracket[1],
        residual=best["residual"],
        iterations=iterations,
    )


def solve_quintic(p: float, q: float, params: ProblemParams, gamma0: float) -> RootReport:
    """
    Solve the quintic g(λ) = 0 on ]−1, 1[.

    Parameters
    ----------
    p: float
        ‖u₀‖² − ‖v₀‖².
    q: float
        ‖u₀‖² + ‖v₀‖², must satisfy |p| < q.
    params: ProblemParams
    gamma0: float

    Returns
    -------
    RootReport

    Raises
    ------
    PreconditionError
        If |p| ≥ q, i.e. one of the blocks is zero.
    RootFindingError
        If the root cannot be bracketed or resolved.
    """
    if not (q > 0 and abs(p) < q):
        msg = f"The quintic needs |p| < q, got p = {p} and q = {q}"
        raise PreconditionError(msg)
    return solve_quintic_norms((q + p) / 2, (q - p) / 2, params, gamma0)


def solve_quintic_norms(u0_norm_sq: float, v0_norm_sq: float, params: ProblemParams, gamma0: float) -> RootReport:
    """
    Solve the quintic g(λ) = 0 on ]−1, 1[ given ‖u₀‖² and ‖v₀‖² separately, which keeps a tiny block that would be
    lost in p and q.

    Raises
    ------
    PreconditionError
        If one of the squared norms is not positive.
    """
    a, b = u0_norm_sq, v0_norm_sq
    if not (a > 0 and b > 0):
        msg = f"The quintic needs both blocks non-zero, got ‖u₀‖² = {a} and ‖v₀‖² = {b}"
        raise PreconditionError(msg)
    evaluate = _evaluator(_quintic_terms, 1.0, a, b, params, gamma0)
    lo, _ = _near_pole(evaluate, -1.0, 1.0, want_positive=True, name="g")
    hi, _ = _near_pole(evaluate, 1.0, -1.0, want_positive=False, name="g")
    return _solve(evaluate, lambda lam: _quintic_slope(lam, a, b, params), lo, hi, params, "g")


def solve_cubic_g1(v0_norm_sq: float, params: ProblemParams, gamma0: float) -> RootReport:
    """
    Solve g₁(λ) = 0 on ]−1, 1[. The caller guarantees g₁(−1) < 0.

    Raises
    ------
    PreconditionError
        If ‖v₀‖² ≤ 0.
    BracketError
        If g₁(−1) ≥ 0.
    """
    if not v0_norm_sq > 0:
        msg = f"g1 needs ‖v₀‖² > 0, got {v0_norm_sq}"
        raise PreconditionError(msg)
    evaluate = _evaluator(_g1_terms, -1.0, v0_norm_sq, params, gamma0)
    lo = -1.0
    if not evaluate(lo)[0] > 0:
        msg = f"g1(-1) = {cubic_g1(lo, v0_norm_sq, params, gamma0)} must be negative to bracket a root in ]-1, 1["
        raise BracketError(msg)
    hi, _ = _near_pole(evaluate, 1.0, -1.0, want_positive=False, name="g1")
    return _solve(evaluate, lambda lam: -cubic_g1_prime(lam, v0_norm_sq, params, gamma0), lo, hi, params, "g1")


def solve_cubic_g2(u0_norm_sq: float, params: ProblemParams, gamma0: float) -> RootReport:
    """
    Solve g₂(λ) = 0 on ]−1, 1[. The caller guarantees g₂(1) < 0.

    Raises
    ------
    PreconditionError
        If ‖u₀‖² ≤ 0.
    BracketError
        If g₂(1) ≥ 0.
    """
    if not u0_norm_sq > 0:
        msg = f"g2 needs ‖u₀‖² > 0, got {u0_norm_sq}"
        raise PreconditionError(msg)
    evaluate = _evaluator(_g2_terms, 1.0, u0_norm_sq, params, gamma0)
    hi = 1.0
    if not evaluate(hi)[0] < 0:
        msg = f"g2(1) = {cubic_g2(hi, u0_norm_sq, params, gamma0)} must be negative to bracket a root in ]-1, 1["
        raise BracketError(msg)
    lo, _ = _near_pole(evaluate, -1.0, 1.0, want_positive=True, name="g2")
    return _solve(evaluate, lambda lam: cubic_g2_prime(lam, u0_norm_sq, params, gamma0), lo, hi, params, "g2")
