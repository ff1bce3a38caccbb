import itertools
import math

import numpy as np
import pytest
from pytest import approx, raises

from paraboloids import (
    PointXXR,
    PreconditionError,
    ProblemParams,
    SetKind,
    ValidatorError,
    convergence_report,
    distance_to_set,
    liminf_witness,
    project_cross,
    project_cross_tilde,
    residual_Ctilde,
    sample_members,
    weighted_distance,
)
from paraboloids.cross import GAMMA_AXIS

HALVINGS = [2.0**-k for k in range(1, 21)]


def on_cross(p, tol=1e-12):
    return abs(float(np.dot(p.x, p.y))) <= tol


def test_cross_tilde_examples():
    s = project_cross_tilde([2.0], [0.0])
    assert s.kind is SetKind.SPHERE_V
    assert s.radius == 1
    assert [(m.x[0], m.y[0]) for m in sample_members(s, 2)] == [(1, 1), (1, -1)]

    s = project_cross_tilde([3.0], [1.0])
    assert s.is_singleton
    assert s.point == PointXXR([2.0], [2.0], 0.0)

    s = project_cross_tilde([3.0, 4.0], [0.0, 5.0], gamma=7.0)
    assert s.point == PointXXR([3.0, 4.0], [0.0, 5.0], 7.0)

    s = project_cross_tilde([0.0, 0.0], [0.0, 0.0])
    assert s.point == PointXXR.zeros(2)


def test_cross_examples():
    params = ProblemParams(alpha=1.0, beta=1.0, n=1)
    p0 = PointXXR([1.0], [1.0], 0.0)
    s = project_cross([1.0], [1.0])
    assert s.kind is SetKind.SPHERE_DIAG_MINUS
    members = sorted((round(m.x[0], 12), round(m.y[0], 12)) for m in sample_members(s, 2))
    assert members == [(0, 1), (1, 0)]
    assert distance_to_set(p0, s, params) == approx(1)

    assert project_cross([1.0], [0.0]).point.allclose(PointXXR([1.0], [0.0], 0.0))
    assert project_cross([0.0], [0.0]).point == PointXXR.zeros(1)


@pytest.mark.parametrize("n", [1, 2])
def test_cross_against_grid(n):
    """Compare with the best point of a grid over the cross, which at n = 1 is the union of the axes."""
    rng = np.random.default_rng(30 + n)
    params = ProblemParams(alpha=1.0, beta=1.0, n=n)
    axis = np.linspace(-4, 4, 161)
    for _ in range(20):
        x0, y0 = rng.uniform(-2, 2, n), rng.uniform(-2, 2, n)
        p0 = PointXXR(x0, y0, 0.0)
        s = project_cross(x0, y0)
        closed = distance_to_set(p0, s, params)
        for m in sample_members(s, 2 * n):
            assert on_cross(m)
            assert weighted_distance(p0, m, params) == approx(closed, abs=1e-10)

        if n == 1:
            grid = np.concatenate([np.stack([axis, 0 * axis], axis=1), np.stack([0 * axis, axis], axis=1)])
        else:
            # x ⊥ y in the plane: y is a multiple of x turned by a quarter turn
            r, t, a = (g.ravel() for g in np.meshgrid(axis[::4], axis[::4], np.linspace(0, math.pi, 181)))
            grid = np.stack([r * np.cos(a), r * np.sin(a), -t * np.sin(a), t * np.cos(a)], axis=1)
        best = float(np.min(np.linalg.norm(grid - np.concatenate([x0, y0]), axis=1)))
        assert closed <= best + 1e-12
        assert best - closed <= 0.25


def test_cross_tilde_properties():
    rng = np.random.default_rng(33)
    params = ProblemParams(alpha=1.0, beta=1.0, n=3)
    for _ in range(200):
        u0, v0 = rng.standard_normal(3), rng.standard_normal(3)
        if rng.integers(4) == 0:
            v0 = np.zeros(3)
        p0 = PointXXR(u0, v0, 0.0)
        s = project_cross_tilde(u0, v0)
        distances = []
        for m in sample_members(s, 6):
            assert np.linalg.norm(m.u) == approx(np.linalg.norm(m.v), abs=1e-12)
            distances.append(weighted_distance(p0, m, params))
        assert max(distances) - min(distances) <= 1e-12


def test_convergence_from_example():
    params = ProblemParams(alpha=1.0, beta=1.0, n=1)
    rows = convergence_report(PointXXR([1.0], [1.0], 0.0), HALVINGS, params)
    assert [row.alpha for row in rows] == HALVINGS
    assert rows[-1].max_dist <= 1e-3
    assert all(row.flag == "" for row in rows)


def test_convergence_feasible_point():
    params = ProblemParams(alpha=1.0, beta=1.0, n=2)
    rows = convergence_report(PointXXR([1.0, 0.0], [0.0, 2.0], 0.0), HALVINGS[:5], params)
    assert all(row.max_dist <= 1e-12 for row in rows)


def test_convergence_random():
    rng = np.random.default_rng(34)
    for _ in range(100):
        n = int(rng.integers(1, 4))
        params = ProblemParams(alpha=1.0, beta=float(rng.uniform(0.5, 2)), n=n)
        p0 = PointXXR(rng.standard_normal(n), rng.standard_normal(n), float(rng.standard_normal()))
        for space in ("c", "tilde"):
            rows = convergence_report(p0, HALVINGS, params, space=space)
            assert rows[-1].max_dist <= 1e-2


def test_convergence_gamma_axis():
    params = ProblemParams(alpha=1.0, beta=1.0, n=1)
    rows = convergence_report(PointXXR([0.0], [0.0], 1.0), HALVINGS, params)
    assert all(row.flag == GAMMA_AXIS for row in rows)
    # the sphere around (0, 0, γ₀ − α) shrinks onto the query
    alpha = HALVINGS[-1]
    assert rows[-1].case_label == "d-a"
    assert rows[-1].max_dist == approx(math.sqrt(2 * alpha - alpha**2), rel=1e-9)
    assert rows[-1].to_dict() == {
        "alpha": alpha,
        "max_dist": rows[-1].max_dist,
        "case_label": "d-a",
        "flag": GAMMA_AXIS,
    }


def test_convergence_validation():
    params = ProblemParams(alpha=1.0, beta=1.0, n=1)
    p0 = PointXXR([1.0], [2.0], 0.0)
    with raises(PreconditionError):
        convergence_report(p0, [0.5, 0.5], params)
    with raises(ValidatorError):
        convergence_report(p0, [0.5, -0.25], params)
    with raises(ValidatorError):
        convergence_report(p0, [0.5], params, space="xy")


def test_liminf_witness():
    params = ProblemParams(alpha=1.0, beta=1.0, n=1)
    p = PointXXR([1.0], [1.0], 2.0)
    witness = liminf_witness(p, 0.1, params)
    assert witness.allclose(PointXXR([math.sqrt(1.2)], [math.sqrt(0.8)], 2.0))
    assert residual_Ctilde(witness, params.with_alpha(0.1)) == approx(0, abs=1e-12)
    assert weighted_distance(p, witness, params) <= 0.2 * math.sqrt(2)

    on_axis = PointXXR([0.0], [0.0], 3.0)
    assert liminf_witness(on_axis, 0.5, params) == PointXXR([math.sqrt(3)], [0.0], 3.0)
    assert liminf_witness(on_axis, -0.5, params) == PointXXR([0.0], [math.sqrt(3)], 3.0)

    with raises(PreconditionError, match="not on the cross"):
        liminf_witness(PointXXR([1.0], [0.0], 0.0), 0.1, params)
    with raises(PreconditionError, match="too large"):
        liminf_witness(PointXXR([1.0], [1.0], 10.0), 1.0, params)


def test_liminf_witness_converges():
    rng = np.random.default_rng(35)
    params = ProblemParams(alpha=1.0, beta=1.0, n=2)
    for _ in range(50):
        norm = rng.uniform(0.5, 2)
        angle, turn = rng.uniform(0, 2 * math.pi, 2)
        u = norm * np.array([math.cos(turn), math.sin(turn)])
        v = norm * np.array([math.cos(angle), math.sin(angle)])
        p = PointXXR(u, v, float(rng.standard_normal()))
        distances = [weighted_distance(p, liminf_witness(p, alpha, params), params) for alpha in HALVINGS[5:]]
        assert distances[-1] <= 1e-4
        assert all(later <= earlier + 1e-15 for earlier, later in itertools.pairwise(distances))


if __name__ == "__main__":
    test_cross_examples()
    test_convergence_from_example()
