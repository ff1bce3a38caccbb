import math

import numpy as np
import pytest
from pytest import approx, raises

from paraboloids import (
    CaseLabel,
    PointXXR,
    ProblemParams,
    ProjectionSet,
    SetKind,
    apply_A,
    apply_At,
    check_kkt,
    dispatch_case_c,
    image_of_set,
    members_equidistant,
    project_c,
    project_tilde,
    residual_C,
    sample_members,
    weighted_norm,
)

EXAMPLE = ProblemParams(alpha=5.0, beta=1.0, n=1)
SQRT2 = math.sqrt(2)


def random_params(rng, n):
    alpha = rng.choice([-1, 1]) * 10 ** rng.uniform(-2, 2)
    return ProblemParams(alpha=float(alpha), beta=float(10 ** rng.uniform(-1, 1)), n=n)


def test_example():
    outcome = project_c(PointXXR([5 / SQRT2], [-1 / SQRT2], 4.0), EXAMPLE)
    p = outcome.projection_set.point
    assert outcome.case_label is CaseLabel.A
    assert outcome.multiplier == approx(-0.52416, abs=1e-5)
    assert (p.x[0], p.y[0], p.gamma) == approx((4.36384, 1.58025, 1.37919), abs=1e-4)
    assert abs(residual_C(p, EXAMPLE)) <= 1e-9


def test_diagonal_sphere():
    p0 = PointXXR([-4.0], [4.0], 6.0)
    assert dispatch_case_c(p0, EXAMPLE) == "b"
    outcome = project_c(p0, EXAMPLE)
    s = outcome.projection_set
    assert outcome.case_label is CaseLabel.B_B
    assert s.kind is SetKind.SPHERE_DIAG_PLUS
    assert s.radius == approx(math.sqrt(18))
    first, second = sample_members(s, 2)
    assert (first.x[0], first.y[0], first.gamma) == approx((1, 5, 1), abs=1e-12)
    assert (second.x[0], second.y[0], second.gamma) == approx((-5, -1, 1), abs=1e-12)
    assert members_equidistant(p0, s, EXAMPLE)
    assert outcome.distance ** 2 == approx(51)


@pytest.mark.parametrize(
    ("p0", "case"),
    [
        (PointXXR([1.0], [2.0], 0.0), "a"),
        (PointXXR([-4.0], [4.0], 6.0), "b"),
        (PointXXR([3.0, 1.0], [3.0, 1.0], 0.0), "c"),
        (PointXXR([0.0], [0.0], 1.0), "d"),
    ],
)
def test_dispatch(p0, case):
    assert dispatch_case_c(p0, EXAMPLE.with_n(p0.n)) == case


def test_conjugation():
    rng = np.random.default_rng(21)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        params = random_params(rng, n)
        p0 = PointXXR(rng.standard_normal(n), rng.standard_normal(n), float(rng.standard_normal()))
        direct = project_c(p0, params)
        tilde = project_tilde(apply_At(p0), params)
        assert direct.case_label == tilde.case_label
        assert direct.multiplier == tilde.multiplier
        assert direct.projection_set.point.allclose(apply_A(tilde.projection_set.point), rtol=1e-10, atol=1e-10)
        assert direct.distance == approx(tilde.distance, rel=1e-10, abs=1e-12)


def test_closed_form():
    """x = (x₀ − λy₀)/(1 − λ²), y = (y₀ − λx₀)/(1 − λ²), γ = γ₀ + λα/β²."""
    rng = np.random.default_rng(22)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        params = random_params(rng, n)
        p0 = PointXXR(rng.standard_normal(n), rng.standard_normal(n), float(rng.standard_normal()))
        outcome = project_c(p0, params)
        assert outcome.case_label is CaseLabel.A
        lam = outcome.multiplier
        expected = PointXXR(
            (p0.x - lam * p0.y) / (1 - lam**2),
            (p0.y - lam * p0.x) / (1 - lam**2),
            p0.gamma + lam * params.shift,
        )
        assert outcome.projection_set.point.allclose(expected, rtol=1e-9, atol=1e-9)
        bound = params.tol_feas * (1 + weighted_norm(p0, params) ** 2)
        assert abs(residual_C(outcome.projection_set.point, params)) <= bound


def test_members_feasible():
    rng = np.random.default_rng(23)
    for _ in range(200):
        params = random_params(rng, 2)
        w, gamma0 = rng.standard_normal(2), float(rng.standard_normal() * 3)
        p0 = [PointXXR(w, w, gamma0), PointXXR(w, -w, gamma0), PointXXR.zeros(2, gamma0)][int(rng.integers(3))]
        outcome = project_c(p0, params)
        bound = params.tol_feas * (1 + weighted_norm(p0, params) ** 2)
        for m in sample_members(outcome.projection_set, 4):
            assert abs(residual_C(m, params)) <= bound
        tilde_members = sample_members(project_tilde(apply_At(p0), params).projection_set, 4)
        for m in tilde_members:
            assert check_kkt(apply_At(p0), m, outcome.multiplier, params) <= bound


def test_feasible_points_are_fixed():
    rng = np.random.default_rng(24)
    for i in range(2000):
        n = int(rng.choice([1, 2, 5]))
        params = random_params(rng, n)
        scale = float(10 ** rng.uniform(-3, 3))
        x, y = scale * rng.standard_normal(n), scale * rng.standard_normal(n)
        match i % 6:
            case 1:
                x = np.zeros(n)
            case 2:
                y = np.zeros(n)
            case 3:
                x, y = np.zeros(n), np.zeros(n)
            case 4:
                y = x.copy()
            case 5:
                y = -x
        p0 = PointXXR(x, y, float(x @ y / params.alpha))
        outcome = project_c(p0, params)
        tol = 1e-9 * (1 + weighted_norm(p0, params))
        assert outcome.projection_set.is_singleton
        assert outcome.distance <= tol
        assert outcome.projection_set.point.allclose(p0, rtol=1e-9, atol=tol)


def test_image_of_set():
    base = PointXXR([1.0], [0.0], 2.0)
    image = image_of_set(ProjectionSet.sphere(SetKind.SPHERE_V, base, 1.0))
    assert image.kind is SetKind.SPHERE_DIAG_MINUS
    assert image.point.allclose(apply_A(base))
    assert image_of_set(ProjectionSet.singleton(base)).point == apply_A(base)
    with raises(ValueError, match="standard-form"):
        image_of_set(image)


if __name__ == "__main__":
    test_example()
    test_diagonal_sphere()
    test_conjugation()
