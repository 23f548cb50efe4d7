"""Tests for the rank-one completion lemma and its multi-start oracle."""

import numpy as np
import pytest

from instanton_gluing.core.config import LemmaConfig
from instanton_gluing.core.exceptions import OracleInconclusiveError, PreconditionError
from instanton_gluing.gauge.rank_one import (
    LemmaKind,
    dedupe_rotations,
    oracle_rank_one,
    pairs_agree,
    rank_one_residual,
    solution_separation,
    solve_rank_one,
    solve_rank_one_reduced,
)
from instanton_gluing.geometry.linalg3 import StratumTag, svd
from instanton_gluing.geometry.rotations import Rotation, sample_rotation
from tests.fixtures.field_helpers import DIAG_321, DIAG_321_SOLUTIONS, REFERENCE_P, rotated


def assert_rank_one(p, pair, tol=1e-10):
    sigma = svd(p + pair.s * pair.m.matrix).sigma
    assert sigma[1] <= tol * svd(p).sigma[0]
    assert sigma[0] > 0


class TestSolveRankOneReduced:
    def test_diag_321_closed_form(self):
        first, second = solve_rank_one_reduced((3.0, 2.0, 1.0), 1)

        np.testing.assert_allclose(first.matrix, DIAG_321_SOLUTIONS[0], atol=1e-14)
        np.testing.assert_allclose(second.matrix, DIAG_321_SOLUTIONS[1], atol=1e-14)

    def test_outputs_are_pi_rotations(self):
        for rotation in solve_rank_one_reduced((5.0, 2.0, 0.5), -1):
            Rotation.from_matrix(rotation.matrix)
            assert rotation.angle == pytest.approx(np.pi)

    @pytest.mark.parametrize("sigma", [(2.0, 2.0, 1.0), (3.0, 1.0, 1.0), (1.0, 2.0, 3.0)])
    def test_requires_strict_order(self, sigma):
        with pytest.raises(PreconditionError):
            solve_rank_one_reduced(sigma, 1)


class TestSolveRankOne:
    def test_diag_321(self):
        outcome = solve_rank_one(DIAG_321)

        assert outcome.kind is LemmaKind.TWO_DISTINCT
        assert [pair.branch for pair in outcome.pairs] == [1, -1]
        for pair, expected in zip(outcome.pairs, DIAG_321_SOLUTIONS):
            assert pair.s == pytest.approx(2.0)
            np.testing.assert_allclose(pair.m.matrix, expected, atol=1e-12)
            assert pair.residual < 1e-10
            assert_rank_one(DIAG_321, pair)

    def test_reference_matrix_has_identity_solution(self):
        outcome = solve_rank_one(REFERENCE_P)

        assert outcome.kind is LemmaKind.TWO_DISTINCT
        assert outcome.pairs[0].s == pytest.approx(1.0)
        distances = [pair.m.angle for pair in outcome.pairs]
        assert min(distances) < 1e-8

    @pytest.mark.parametrize("diagonal", [(3.0, 2.0, -1.0), (3.0, 2.0, 0.0), (4.0, 1.5, -1.2)])
    def test_signed_and_sigma3_zero_cases(self, diagonal):
        p = np.diag(diagonal)
        outcome = solve_rank_one(p)

        assert outcome.kind is LemmaKind.TWO_DISTINCT
        for pair in outcome.pairs:
            assert_rank_one(p, pair)

    def test_random_generic_matrices(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            p = rng.uniform(-1.0, 1.0, (3, 3))
            outcome = solve_rank_one(p)
            assert outcome.kind is LemmaKind.TWO_DISTINCT
            assert solution_separation(outcome) > 0
            for pair in outcome.pairs:
                assert pair.s == pytest.approx(svd(p).sigma[1])
                assert_rank_one(p, pair, tol=1e-9)

    @pytest.mark.parametrize("diagonal", [(2.0, 2.0, 1.0), (3.0, 1.0, 1.0)])
    def test_double_root(self, diagonal):
        p = np.diag(diagonal)
        outcome = solve_rank_one(p)

        assert outcome.kind is LemmaKind.DOUBLE_ROOT
        assert len(outcome.pairs) == 1
        assert_rank_one(p, outcome.pairs[0])
        assert solution_separation(outcome) == 0.0

    @pytest.mark.parametrize(
        "p, tag",
        [
            (np.eye(3), StratumTag.SCALAR_ROTATION),
            (np.diag([2.0, 0.0, 0.0]), StratumTag.RANK_LE_ONE),
            (np.zeros((3, 3)), StratumTag.ZERO),
        ],
    )
    def test_degenerate(self, p, tag):
        outcome = solve_rank_one(p)

        assert outcome.kind is LemmaKind.DEGENERATE
        assert outcome.pairs == []
        assert outcome.stratum.tag is tag

    def test_scaled_rotations_are_degenerate(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            p = rng.uniform(0.1, 10.0) * sample_rotation(rng).matrix
            assert solve_rank_one(p).kind is LemmaKind.DEGENERATE

    def test_equivariance(self):
        rng = np.random.default_rng(8)
        left, right = sample_rotation(rng), sample_rotation(rng)
        base = solve_rank_one(DIAG_321)
        moved = solve_rank_one(rotated(DIAG_321, left, right))

        expected = [left.matrix @ pair.m.matrix @ right.matrix.T for pair in base.pairs]
        for matrix in expected:
            assert any(np.allclose(pair.m.matrix, matrix, atol=1e-10) for pair in moved.pairs)

    def test_uncertified_output_is_degenerate(self, mocker):
        mocker.patch(
            "instanton_gluing.gauge.rank_one.rank_one_residual", return_value=(1.0, 0.5)
        )
        warning = mocker.patch("instanton_gluing.gauge.rank_one.Logger.warning")

        outcome = solve_rank_one(DIAG_321)

        assert outcome.kind is LemmaKind.DEGENERATE
        warning.assert_called_once()


class TestOracle:
    def test_finds_both_solutions(self):
        rng = np.random.default_rng(0)
        found = oracle_rank_one(DIAG_321, 200, rng)

        assert pairs_agree(solve_rank_one(DIAG_321).pairs, found)

    def test_requires_generic_input(self):
        with pytest.raises(PreconditionError):
            oracle_rank_one(np.eye(3), 10, np.random.default_rng(0))

    def test_inconclusive_with_many_starts(self, mocker):
        mocker.patch("instanton_gluing.gauge.rank_one.dedupe_rotations", return_value=[])
        mocker.patch("instanton_gluing.gauge.rank_one.least_squares").return_value.x = np.zeros(3)

        with pytest.raises(OracleInconclusiveError):
            oracle_rank_one(DIAG_321, 1000, np.random.default_rng(0))

    def test_dedupe_keeps_lowest_residual(self):
        pair = solve_rank_one(DIAG_321).pairs[0]
        worse = type(pair)(s=pair.s, m=pair.m, residual=pair.residual + 1.0)

        kept = dedupe_rotations([worse, pair], angle_tol=1e-4)

        assert kept == [pair]

    def test_pairs_agree_detects_mismatch(self):
        pairs = solve_rank_one(DIAG_321).pairs

        assert pairs_agree(pairs, list(reversed(pairs)))
        assert not pairs_agree(pairs, pairs[:1])

    @pytest.mark.slow
    def test_random_matrices_match_oracle(self):
        rng = np.random.default_rng(2024)
        config = LemmaConfig()
        for k in range(20):
            p = rng.uniform(-1.0, 1.0, (3, 3))
            found = oracle_rank_one(p, 1000, np.random.default_rng([2024, k]), config)
            assert pairs_agree(solve_rank_one(p).pairs, found)

    def test_rank_one_residual_is_zero_at_solution(self):
        pair = solve_rank_one(DIAG_321).pairs[1]

        top, second = rank_one_residual(DIAG_321, pair.s, pair.m)

        assert second < 1e-12
        assert top > 1.0
