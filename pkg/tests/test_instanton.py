"""Tests for the standard instanton curvature and the gluing-angle map."""

import numpy as np
import pytest

from instanton_gluing.core.exceptions import GaugeSingularityError, PreconditionError
from instanton_gluing.gauge.instanton import (
    StdInstanton,
    TwoPointConfig,
    f_std,
    f_std_regular,
    g_large_expansion,
    g_map,
    g_map_batch,
    g_preimages,
    g_small_expansion,
    magnitude,
)
from instanton_gluing.geometry.linalg3 import svd
from instanton_gluing.geometry.rotations import (
    Rotation,
    quat,
    quat_exp,
    rho,
    rho_matrix,
    sample_rotation,
)


EXPANSION_T = np.array([1e-1, 3e-2, 1e-2, 3e-3, 1e-3])


def _assert_quadratic(errors):
    """Pendiente 2 en log–log a lo largo de tres décadas de t."""
    errors = np.asarray(errors)
    slope = np.polyfit(np.log(EXPANSION_T), np.log(errors), 1)[0]
    assert slope == pytest.approx(2.0, abs=0.1)
    scaled = errors / EXPANSION_T**2
    assert scaled.max() / scaled.min() < 2.0


@pytest.fixture
def cfg():
    return TwoPointConfig(0.1)


class TestTwoPointConfig:
    def test_points(self, cfg):
        np.testing.assert_allclose(cfg.p, [0.1, 0.0, 0.0, 0.0])
        np.testing.assert_allclose(cfg.q, [-0.1, 0.0, 0.0, 0.0])

    @pytest.mark.parametrize("L", [0.0, -1.0, np.inf, np.nan])
    def test_rejects_bad_L(self, L):
        with pytest.raises(PreconditionError):
            TwoPointConfig(L)


class TestStdInstanton:
    def test_magnitude_at_center(self):
        inst = StdInstanton(center=np.zeros(4), scale=0.5, gluing_angle=Rotation.identity())

        assert magnitude(inst, np.zeros(4)) == pytest.approx(4.0)

    def test_rejects_non_positive_scale(self):
        with pytest.raises(PreconditionError):
            StdInstanton(center=np.zeros(4), scale=0.0, gluing_angle=Rotation.identity())

    def test_rejects_bad_center(self):
        with pytest.raises(PreconditionError):
            StdInstanton(center=np.zeros(3), scale=1.0, gluing_angle=Rotation.identity())

    def test_outer_gauge_is_multiple_of_rotation(self):
        rng = np.random.default_rng(3)
        m = sample_rotation(rng)
        inst = StdInstanton(center=np.array([0.1, 0.2, -0.3, 0.4]), scale=0.2, gluing_angle=m)
        x = np.array([1.0, -0.5, 0.25, 0.0])

        value = f_std(inst, x)
        sigma = svd(value).sigma

        np.testing.assert_allclose(sigma, magnitude(inst, x), rtol=1e-12)
        assert np.linalg.det(value) > 0

    def test_outer_gauge_formula(self):
        m = Rotation(rho_matrix(quat_exp([0.2, 0.0, 0.1])))
        inst = StdInstanton(center=np.zeros(4), scale=1.0, gluing_angle=m)
        x = np.array([0.0, 0.0, 1.0, 0.0])

        expected = 0.25 * m.matrix.T @ rho(quat(0.0, 0.0, 1.0)).matrix

        np.testing.assert_allclose(f_std(inst, x), expected, atol=1e-14)

    def test_regular_gauge_matches_norm(self):
        rng = np.random.default_rng(6)
        inst = StdInstanton(center=np.zeros(4), scale=0.3, gluing_angle=sample_rotation(rng))
        x = rng.standard_normal(4)

        np.testing.assert_allclose(
            svd(f_std(inst, x)).sigma, svd(f_std_regular(inst, x)).sigma, rtol=1e-12
        )

    def test_outer_gauge_singular_at_center(self):
        inst = StdInstanton(center=np.ones(4), scale=1.0, gluing_angle=Rotation.identity())

        with pytest.raises(GaugeSingularityError):
            f_std(inst, np.ones(4))


class TestGMap:
    def test_origin_maps_to_minus_one(self, cfg):
        np.testing.assert_allclose(g_map(cfg, np.zeros(4)), quat(-1.0), atol=1e-15)

    def test_is_unit(self, cfg):
        rng = np.random.default_rng(0)
        values = g_map_batch(cfg.L, rng.standard_normal((50, 4)))

        np.testing.assert_allclose(np.linalg.norm(values, axis=-1), 1.0)

    def test_batch_matches_scalar(self, cfg):
        y = np.array([0.03, -0.02, 0.05, 0.01])

        np.testing.assert_allclose(g_map_batch(cfg.L, y[None, :])[0], g_map(cfg, y))

    @pytest.mark.parametrize("point", ["p", "q"])
    def test_singular_at_marked_points(self, cfg, point):
        with pytest.raises(GaugeSingularityError):
            g_map(cfg, getattr(cfg, point))

    def test_small_expansion_remainder_is_quadratic(self, cfg):
        direction = np.array([0.3, -0.4, 0.5]) / np.linalg.norm([0.3, -0.4, 0.5])
        errors = []
        for t in EXPANSION_T:
            y_imag = t * cfg.L * direction
            exact = g_map(cfg, np.concatenate([[0.0], y_imag]))
            errors.append(np.linalg.norm(exact - g_small_expansion(cfg, y_imag)))

        _assert_quadratic(errors)
        # el resto es exactamente 2t²/√(1 + t²)
        np.testing.assert_allclose(
            errors, 2 * EXPANSION_T**2 / np.sqrt(1 + EXPANSION_T**2), rtol=1e-6
        )

    def test_large_expansion_remainder_is_quadratic(self, cfg):
        direction = np.array([1.0, 2.0, -2.0]) / 3.0
        errors = []
        for t in EXPANSION_T:
            y_imag = cfg.L / t * direction
            exact = g_map(cfg, np.concatenate([[0.0], y_imag]))
            errors.append(np.linalg.norm(exact - g_large_expansion(cfg, y_imag)))

        _assert_quadratic(errors)

class TestGPreimages:
    def test_preimage_maps_back(self, cfg):
        rng = np.random.default_rng(10)
        for _ in range(20):
            h = rng.standard_normal(4)
            h /= np.linalg.norm(h)
            (y_imag,) = g_preimages(cfg, h)
            np.testing.assert_allclose(
                g_map(cfg, np.concatenate([[0.0], y_imag])), h, atol=1e-12
            )

    def test_identity_has_no_preimage(self, cfg):
        assert g_preimages(cfg, quat(1.0)) == []

    def test_minus_one_preimage_is_origin(self, cfg):
        (y_imag,) = g_preimages(cfg, quat(-1.0))

        np.testing.assert_allclose(y_imag, 0.0)

    def test_near_identity_preimage_is_far(self, cfg):
        h = quat_exp([0.0, 0.0, 0.01])
        (far,) = g_preimages(cfg, h)
        (near,) = g_preimages(cfg, -h)

        assert np.linalg.norm(far) > 100 * cfg.L
        assert np.linalg.norm(near) < 0.01 * cfg.L
