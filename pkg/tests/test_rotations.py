"""Tests for quaternions, SO(3) and the double cover."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from instanton_gluing.core.exceptions import PreconditionError, RotationError
from instanton_gluing.geometry.rotations import (
    Rotation,
    canonical_sign,
    pi_rotation,
    quat,
    quat_mul,
    quat_normalize,
    rho,
    rho_inverse_pair,
    rho_matrix,
    rotation_distance,
    rotation_from_vector,
    sample_rotation,
    sample_unit_quaternion,
)

unit_quaternions = (
    arrays(np.float64, (4,), elements=st.floats(-1.0, 1.0))
    .filter(lambda q: np.linalg.norm(q) > 0.1)
    .map(quat_normalize)
)


class TestQuaternions:
    def test_hamilton_convention(self):
        i, j, k = quat(0, 1), quat(0, 0, 1), quat(0, 0, 0, 1)

        np.testing.assert_allclose(quat_mul(i, j), k)
        np.testing.assert_allclose(quat_mul(j, i), -k)
        np.testing.assert_allclose(quat_mul(i, i), quat(-1))

    def test_mul_broadcasts(self):
        rng = np.random.default_rng(0)
        a = sample_unit_quaternion(rng, 5)
        b = sample_unit_quaternion(rng)

        product = quat_mul(a, b)

        assert product.shape == (5, 4)
        np.testing.assert_allclose(product[2], quat_mul(a[2], b))

    @pytest.mark.parametrize(
        "q, expected",
        [
            ((-0.5, 0.5, 0.5, 0.5), (0.5, -0.5, -0.5, -0.5)),
            ((0.0, -1.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0)),
            ((0.0, 0.0, -0.6, 0.8), (0.0, 0.0, 0.6, -0.8)),
        ],
    )
    def test_canonical_sign(self, q, expected):
        np.testing.assert_allclose(canonical_sign(np.array(q)), expected)


class TestRho:
    def test_identity_and_i(self):
        np.testing.assert_allclose(rho(quat(1.0)).matrix, np.eye(3))
        np.testing.assert_allclose(rho(quat(0.0, 1.0)).matrix, np.diag([1.0, -1.0, -1.0]))

    def test_rejects_non_unit(self):
        with pytest.raises(PreconditionError):
            rho(quat(2.0))

    def test_accepts_tiny_norm_error(self):
        g = quat(1.0 + 5e-10)

        np.testing.assert_allclose(rho(g).matrix, np.eye(3), atol=1e-9)

    @given(unit_quaternions, unit_quaternions)
    @settings(max_examples=200, deadline=None)
    def test_homomorphism(self, a, b):
        np.testing.assert_allclose(
            rho(quat_mul(a, b)).matrix, rho(a).matrix @ rho(b).matrix, atol=1e-12
        )

    @given(unit_quaternions)
    @settings(max_examples=200, deadline=None)
    def test_double_cover(self, g):
        np.testing.assert_allclose(rho(g).matrix, rho(-g).matrix, atol=1e-15)

    @given(unit_quaternions)
    @settings(max_examples=200, deadline=None)
    def test_image_is_rotation(self, g):
        Rotation.from_matrix(rho(g).matrix)

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(4)
        qs = sample_unit_quaternion(rng, (2, 3))

        batch = rho_matrix(qs)

        assert batch.shape == (2, 3, 3, 3)
        np.testing.assert_allclose(batch[1, 2], rho(qs[1, 2]).matrix)


class TestRhoInversePair:
    @given(unit_quaternions)
    @settings(max_examples=300, deadline=None)
    def test_recovers_lift_up_to_sign(self, g):
        first, second = rho_inverse_pair(rho(g))

        np.testing.assert_allclose(second, -first)
        assert min(np.linalg.norm(first - g), np.linalg.norm(first + g)) < 1e-10
        np.testing.assert_allclose(rho(first).matrix, rho(g).matrix, atol=1e-12)

    def test_first_lift_has_canonical_sign(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            first, _ = rho_inverse_pair(sample_rotation(rng))
            assert first[0] >= 0

    @pytest.mark.parametrize("axis", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    def test_pi_rotations(self, axis):
        r = pi_rotation(axis)
        first, _ = rho_inverse_pair(r)

        assert abs(first[0]) < 1e-12
        np.testing.assert_allclose(rho(first).matrix, r.matrix, atol=1e-12)

    def test_accepts_matrix_input(self):
        first, _ = rho_inverse_pair(np.eye(3))

        np.testing.assert_allclose(first, quat(1.0))

    def test_rejects_non_rotation(self):
        with pytest.raises(RotationError):
            rho_inverse_pair(np.diag([1.0, 1.0, -1.0]))
        with pytest.raises(RotationError):
            rho_inverse_pair(2.0 * np.eye(3))


class TestRotation:
    def test_from_matrix_validates(self):
        with pytest.raises(RotationError):
            Rotation.from_matrix(np.diag([1.0, 2.0, 1.0]))
        with pytest.raises(RotationError):
            Rotation.from_matrix(np.full((3, 3), np.nan))

    def test_from_matrix_tolerance(self):
        m = np.eye(3)
        m[0, 1] = 1e-7

        with pytest.raises(RotationError):
            Rotation.from_matrix(m)
        assert Rotation.from_matrix(m, tol=1e-6) is not None

    def test_composition_and_inverse(self):
        rng = np.random.default_rng(9)
        a, b = sample_rotation(rng), sample_rotation(rng)

        np.testing.assert_allclose((a @ b).matrix, a.matrix @ b.matrix)
        np.testing.assert_allclose((a @ a.inverse()).matrix, np.eye(3), atol=1e-12)
        np.testing.assert_allclose(a @ np.array([1.0, 0.0, 0.0]), a.matrix[:, 0])

    def test_rotation_from_vector_angle(self):
        r = rotation_from_vector([0.0, 0.0, 0.3])

        assert r.angle == pytest.approx(0.3)
        np.testing.assert_allclose(r @ np.array([1.0, 0.0, 0.0]), [np.cos(0.3), np.sin(0.3), 0.0])

    def test_distance_is_symmetric_and_bounded(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a, b = sample_rotation(rng), sample_rotation(rng)
            d = rotation_distance(a, b)
            assert 0.0 <= d <= np.pi + 1e-12
            assert d == pytest.approx(rotation_distance(b, a), abs=1e-12)

    def test_pi_rotation_distance(self):
        assert rotation_distance(Rotation.identity(), pi_rotation([0, 1, 0])) == pytest.approx(np.pi)

    def test_haar_sampling_is_reproducible(self):
        first = sample_rotation(np.random.default_rng(42))
        second = sample_rotation(np.random.default_rng(42))

        np.testing.assert_array_equal(first.matrix, second.matrix)


class TestHaarMoments:
    """Para la medida de Haar en SO(3): E[tr R] = 0 y E[(tr R)²] = 1."""

    def test_trace_moments_of_batched_samples(self):
        rng = np.random.default_rng(2024)
        traces = np.trace(rho_matrix(sample_unit_quaternion(rng, 100_000)), axis1=-2, axis2=-1)

        assert abs(traces.mean()) < 0.02
        assert (traces**2).mean() == pytest.approx(1.0, abs=0.05)

    def test_trace_mean_of_single_draws(self):
        rng = np.random.default_rng(5)
        traces = [np.trace(sample_rotation(rng).matrix) for _ in range(2000)]

        assert abs(np.mean(traces)) < 0.1

    def test_rotation_angle_is_not_uniform(self):
        rng = np.random.default_rng(9)
        angles = [rotation_distance(Rotation.identity(), sample_rotation(rng)) for _ in range(4000)]

        # densidad (1 − cos θ)/π: E[θ] = π/2 + 2/π
        assert np.mean(angles) == pytest.approx(np.pi / 2 + 2 / np.pi, abs=0.05)
