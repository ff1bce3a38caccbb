import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from paraboloids import PointXXR, ProblemParams, apply_A, apply_At, residual_C, residual_Ctilde, weighted_norm

SQRT2 = math.sqrt(2)


@pytest.mark.parametrize(
    ("uv", "xy"),
    [
        (PointXXR([SQRT2], [0], 7), PointXXR([1], [1], 7)),
        (PointXXR([0], [0], 3.5), PointXXR([0], [0], 3.5)),
        (PointXXR([2], [-3], 4), PointXXR([5 / SQRT2], [-1 / SQRT2], 4)),
    ],
)
def test_apply_a(uv, xy):
    assert apply_A(uv).allclose(xy, atol=1e-15)


@pytest.mark.parametrize(
    ("xy", "uv"),
    [
        (PointXXR([1], [1], 0), PointXXR([SQRT2], [0], 0)),
        (PointXXR([1], [0], 0), PointXXR([1 / SQRT2], [-1 / SQRT2], 0)),
    ],
)
def test_apply_at(xy, uv):
    assert apply_At(xy).allclose(uv, atol=1e-15)


def test_unitarity_random():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        n = int(rng.integers(1, 8))
        params = ProblemParams(alpha=float(rng.uniform(0.1, 10)), beta=float(rng.uniform(0.1, 10)), n=n)
        p = PointXXR(rng.normal(size=n), rng.normal(size=n), rng.normal())
        back = apply_At(apply_A(p))
        assert_allclose(back.x, p.x, atol=1e-12)
        assert_allclose(back.y, p.y, atol=1e-12)
        assert back.gamma == p.gamma
        assert_allclose(apply_A(apply_At(p)).x, p.x, atol=1e-12)
        assert weighted_norm(apply_A(p), params) == pytest.approx(weighted_norm(p, params), abs=1e-12)


def test_set_correspondence_random():
    # A maps C̃_α onto C_α; the residuals differ by the factor 2 between the two constraint forms.
    rng = np.random.default_rng(2)
    for _ in range(1000):
        n = int(rng.integers(1, 8))
        params = ProblemParams(alpha=float(rng.choice([-1, 1]) * rng.uniform(0.1, 10)), beta=1.0, n=n)
        p = PointXXR(rng.normal(size=n), rng.normal(size=n), rng.normal())
        assert 2 * residual_C(apply_A(p), params) == pytest.approx(residual_Ctilde(p, params), abs=1e-12 * (1 + n))


if __name__ == "__main__":
    test_unitarity_random()
    test_set_correspondence_random()
