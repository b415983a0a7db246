# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""Tests for mixlr.regression."""

import numpy as np
import pytest

from mixlr.common import EmptyPartError, InsufficientDataError, InvalidInputError
from mixlr.core import Dataset
from mixlr.regression import RobustConfig, fit_part, least_squares, robust_fit, sq_error


def line_with_outliers():
    """20 points exactly on y = 2x plus two gross outliers."""
    x = np.logspace(-3, 0, 20)
    covariates = np.concatenate([x, [0.5, 0.3]])[:, None]
    targets = np.concatenate([2.0 * x, [40.0, -30.0]])
    return Dataset(covariates, targets)


class TestLeastSquares:
    def test_exact_line(self):
        data = Dataset([[1.0], [2.0]], [2.0, 4.0])
        np.testing.assert_allclose(least_squares(data), [2.0], rtol=1e-12)

    def test_normal_equation(self):
        data = Dataset([[1.0], [2.0]], [1.0, 1.0])
        np.testing.assert_allclose(least_squares(data), [0.6], rtol=1e-12)

    def test_orthonormal_design(self):
        data = Dataset([[1.0, 0.0], [0.0, 1.0]], [1.0, 2.0])
        np.testing.assert_allclose(least_squares(data), [1.0, 2.0], rtol=1e-12)

    def test_subset_view(self):
        data = Dataset([[1.0], [2.0], [5.0]], [2.0, 4.0, 0.0])
        np.testing.assert_allclose(least_squares(data, [0, 1]), [2.0], rtol=1e-12)

    def test_empty_part(self):
        with pytest.raises(EmptyPartError):
            least_squares(Dataset([[1.0]], [1.0]), [])

    def test_minimum_norm_on_rank_deficiency(self):
        # every theta with theta_0 + theta_1 = 2 fits exactly
        data = Dataset([[1.0, 1.0], [2.0, 2.0]], [2.0, 4.0])
        theta = least_squares(data)
        np.testing.assert_allclose(theta, [1.0, 1.0], rtol=1e-10)
        assert np.linalg.norm(theta) <= np.linalg.norm([2.0, 0.0])

    def test_residual_optimality(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            data = Dataset(rng.standard_normal((12, 3)), rng.standard_normal(12))
            theta = least_squares(data)
            best = sq_error(data, theta)
            for _ in range(100):
                assert best <= sq_error(data, theta + 1e-3 * rng.standard_normal(3)) + 1e-12


class TestSqError:
    def test_zero_at_exact_fit(self):
        data = Dataset([[1.0], [3.0]], [-1.0, -3.0])
        assert sq_error(data, least_squares(data)) == pytest.approx(0.0, abs=1e-24)

    def test_single_point(self):
        assert sq_error(Dataset([[1.0]], [1.0]), [0.0]) == 1.0

    def test_is_a_sum(self):
        data = Dataset([[1.0], [2.0]], [1.0, 1.0])
        assert sq_error(data, [0.6]) == pytest.approx(0.20)

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            sq_error(Dataset([[1.0]], [1.0]), [0.0, 1.0])


def two_line_part():
    """60 noisy points on the line with intercept 100, 40 on the line with
    intercept 0."""
    rng = np.random.default_rng(11)
    covariates = np.hstack([rng.uniform(-1.0, 1.0, (100, 2)), np.ones((100, 1))])
    thetas = np.array([[1.0, -2.0, 100.0], [3.0, 1.0, 0.0]])
    labels = np.repeat([0, 1], [60, 40])
    targets = np.einsum("ij,ij->i", covariates, thetas[labels]) + rng.normal(0.0, 4.0, 100)
    return Dataset(covariates, targets)


class TestRobustFit:
    def test_follows_majority_line(self):
        theta = robust_fit(two_line_part(), RobustConfig(seed=5))
        assert abs(theta[2] - 100.0) < 3.0
        assert np.abs(theta[:2] - [1.0, -2.0]).max() < 4.0

    def test_least_squares_splits_the_lines(self):
        assert abs(least_squares(two_line_part())[2] - 100.0) > 20.0

    def test_recovers_line_despite_outliers(self):
        theta = robust_fit(line_with_outliers(), RobustConfig(seed=3))
        assert abs(theta[0] - 2.0) < 1e-9

    def test_least_squares_is_fooled(self):
        assert abs(least_squares(line_with_outliers())[0] - 2.0) > 1.0

    def test_exactly_linear_matches_least_squares(self):
        rng = np.random.default_rng(2)
        x = rng.standard_normal((30, 2))
        data = Dataset(x, x @ np.array([1.5, -0.5]))
        np.testing.assert_allclose(
            robust_fit(data, RobustConfig()), least_squares(data), rtol=1e-12, atol=1e-14
        )

    def test_minimal_part_is_least_squares(self):
        data = Dataset([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]], [1.0, 2.0, 4.0])
        np.testing.assert_array_equal(robust_fit(data, RobustConfig()), least_squares(data))

    def test_insufficient_data(self):
        with pytest.raises(InsufficientDataError) as info:
            robust_fit(Dataset([[1.0, 0.0]], [1.0]), RobustConfig())
        assert (info.value.available, info.value.required) == (1, 3)

    def test_deterministic(self):
        rng = np.random.default_rng(4)
        data = Dataset(rng.standard_normal((40, 2)), rng.standard_normal(40))
        cfg = RobustConfig(seed=9)
        np.testing.assert_array_equal(robust_fit(data, cfg), robust_fit(data, cfg))

    @pytest.mark.parametrize(
        "kwargs", [{"trials": 0}, {"min_sample": 0}, {"inlier_scale": 0.0}, {"seed": -1}]
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(InvalidInputError):
            RobustConfig(**kwargs)


class TestFitPart:
    def test_small_part_is_zero(self):
        data = Dataset([[1.0], [2.0]], [1.0, 2.0])
        assert fit_part(data, [0], min_part_size=2).tolist() == [0.0]

    def test_empty_part_is_zero(self):
        assert fit_part(Dataset([[1.0]], [1.0]), []).tolist() == [0.0]

    def test_robust_falls_back_below_minimal_sample(self):
        data = Dataset([[1.0], [2.0], [3.0]], [1.0, 1.0, 5.0])
        theta = fit_part(data, [0, 1], "robust", RobustConfig(min_sample=3))
        np.testing.assert_allclose(theta, least_squares(data, [0, 1]))

    def test_unknown_regressor(self):
        with pytest.raises(InvalidInputError):
            fit_part(Dataset([[1.0]], [1.0]), [0], "huber")
