# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""Tests for mixlr.core."""

import numpy as np
import pytest

from mixlr.common import EmptyPartError, InvalidInputError
from mixlr.core import (
    DataBounds,
    Dataset,
    ModelSet,
    Partition,
    assign,
    data_bounds,
    min_loss_dataset,
    min_loss_point,
    normalize,
    predict_list,
)


def random_dataset(rng, n, d):
    return Dataset(rng.standard_normal((n, d)), rng.standard_normal(n))


class TestMinLossPoint:
    def test_exact_hit(self):
        assert min_loss_point(1.0, [1.0, 5.0]) == (0.0, 0)

    def test_single_model_is_squared_error(self):
        assert min_loss_point(2.0, [0.0]) == (4.0, 0)

    def test_tie_goes_to_lowest_index(self):
        assert min_loss_point(0.5, [0.0, 1.0]) == (0.25, 0)

    @pytest.mark.parametrize("y, predictions", [(np.nan, [0.0]), (1.0, [np.inf, 0.0])])
    def test_non_finite_rejected(self, y, predictions):
        with pytest.raises(InvalidInputError):
            min_loss_point(y, predictions)

    def test_empty_predictions_rejected(self):
        with pytest.raises(InvalidInputError):
            min_loss_point(1.0, [])


class TestPredictList:
    def test_one_dimensional(self):
        assert predict_list(ModelSet([[1.0], [-1.0]]), [2.0]).tolist() == [2.0, -2.0]

    def test_zero_model(self):
        assert predict_list(ModelSet([[0.0, 0.0]]), [3.0, 4.0]).tolist() == [0.0]

    def test_coordinate_projections(self):
        models = ModelSet([[1.0, 0.0], [0.0, 1.0]])
        assert predict_list(models, [3.0, 4.0]).tolist() == [3.0, 4.0]

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            predict_list(ModelSet([[1.0, 0.0]]), [1.0])


class TestMinLossDataset:
    def test_realizable_two_lines(self, two_points, two_lines):
        report = min_loss_dataset(two_points, two_lines)
        assert report.total == 0.0
        assert report.per_point_argmin.tolist() == [0, 1]

    def test_zero_models(self, two_points):
        assert min_loss_dataset(two_points, ModelSet([[0.0], [0.0]])).total == 1.0

    def test_hand_evaluation(self):
        data = Dataset([[1.0], [2.0]], [1.0, 1.0])
        assert min_loss_dataset(data, ModelSet([[0.6]])).total == pytest.approx(0.10)

    def test_dimension_mismatch(self, two_points):
        with pytest.raises(InvalidInputError):
            min_loss_dataset(two_points, ModelSet([[1.0, 2.0]]))

    def test_report_consistency(self):
        rng = np.random.default_rng(3)
        data = random_dataset(rng, 50, 3)
        models = ModelSet(rng.standard_normal((4, 3)))
        report = min_loss_dataset(data, models)
        residuals = data.targets - np.einsum(
            "nd,nd->n", data.covariates, models.thetas[report.per_point_argmin]
        )
        np.testing.assert_allclose(report.per_point_loss, residuals**2, rtol=1e-10, atol=1e-12)
        assert report.total == pytest.approx(np.mean(report.per_point_loss), rel=1e-12)
        assert np.all(report.per_point_loss >= 0)


class TestAssign:
    def test_two_lines(self, two_points, two_lines):
        assert assign(two_points, two_lines).labels.tolist() == [0, 1]

    def test_single_component(self):
        rng = np.random.default_rng(0)
        data = random_dataset(rng, 10, 2)
        assert assign(data, ModelSet([[0.5, -0.5]])).labels.tolist() == [0] * 10

    def test_tie_goes_to_lowest_index(self, two_lines):
        assert assign(Dataset([[1.0]], [0.0]), two_lines).labels.tolist() == [0]

    def test_matches_min_loss_argmin(self):
        rng = np.random.default_rng(5)
        data = random_dataset(rng, 40, 2)
        models = ModelSet(rng.standard_normal((3, 2)))
        np.testing.assert_array_equal(
            assign(data, models).labels, min_loss_dataset(data, models).per_point_argmin
        )

    def test_repeated_calls_identical(self):
        rng = np.random.default_rng(6)
        data = random_dataset(rng, 30, 2)
        models = ModelSet(rng.standard_normal((3, 2)))
        assert assign(data, models) == assign(data, models)

    def test_permutation_covariance(self):
        rng = np.random.default_rng(7)
        data = random_dataset(rng, 60, 2)
        models = ModelSet(rng.standard_normal((3, 2)))
        perm = np.array([2, 0, 1])
        permuted = ModelSet(models.thetas[perm])
        # component perm[j] of the original sits at index j
        inverse = np.argsort(perm)
        np.testing.assert_array_equal(
            assign(data, permuted).labels, inverse[assign(data, models).labels]
        )


class TestMonotonicityInK:
    def test_appending_never_increases_loss(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            data = random_dataset(rng, 25, 3)
            models = ModelSet(rng.standard_normal((2, 3)))
            before = min_loss_dataset(data, models).total
            after = min_loss_dataset(data, models.append(rng.standard_normal(3))).total
            assert after <= before + 1e-12


class TestNormalize:
    def test_scales_are_the_maxima(self):
        data = Dataset([[2.0, 0.0], [1.0, 0.0]], [4.0, -1.0])
        _, x_scale, y_scale = normalize(data)
        assert (x_scale, y_scale) == (2.0, 4.0)

    def test_bounded_data_untouched(self):
        data = Dataset([[0.5, 0.5]], [0.25])
        scaled, x_scale, y_scale = normalize(data)
        assert (x_scale, y_scale) == (1.0, 1.0)
        assert scaled == data

    def test_divides_by_norms(self):
        scaled, _, _ = normalize(Dataset([[3.0, 4.0]], [10.0]))
        np.testing.assert_allclose(scaled.covariates, [[0.6, 0.8]])
        assert scaled.targets.tolist() == [1.0]

    def test_result_is_bounded(self):
        rng = np.random.default_rng(9)
        data = Dataset(rng.normal(0, 10, (30, 4)), rng.normal(0, 50, 30))
        scaled, _, _ = normalize(data)
        assert np.max(np.linalg.norm(scaled.covariates, axis=1)) <= 1.0 + 1e-15
        assert np.max(np.abs(scaled.targets)) <= 1.0

    def test_common_scaling_preserves_assignment(self):
        rng = np.random.default_rng(10)
        data = random_dataset(rng, 50, 2)
        models = ModelSet(rng.standard_normal((3, 2)))
        # a power of two scales every residual exactly
        scaled = Dataset(data.covariates, data.targets / 4.0)
        assert assign(scaled, ModelSet(models.thetas / 4.0)) == assign(data, models)


class TestTypes:
    def test_dataset_rejects_non_finite(self):
        with pytest.raises(InvalidInputError):
            Dataset([[1.0], [np.nan]], [1.0, 2.0])

    def test_dataset_rejects_row_mismatch(self):
        with pytest.raises(InvalidInputError):
            Dataset([[1.0], [2.0]], [1.0])

    def test_dataset_is_read_only(self):
        data = Dataset([[1.0]], [1.0])
        with pytest.raises(ValueError):
            data.targets[0] = 2.0

    def test_take_empty(self, two_points):
        with pytest.raises(EmptyPartError):
            two_points.take([])

    def test_with_bias(self, two_points):
        biased = two_points.with_bias()
        assert biased.d == 2
        assert biased.covariates[:, 1].tolist() == [1.0, 1.0]

    def test_model_set_replicate(self):
        assert ModelSet.replicate([1.0, 2.0], 3).k == 3

    def test_model_set_append_checks_dimension(self, two_lines):
        with pytest.raises(InvalidInputError):
            two_lines.append([1.0, 2.0])

    def test_model_set_rejects_ragged_rows(self):
        with pytest.raises(InvalidInputError):
            ModelSet([[1.0], [2.0, 3.0]])

    def test_partition_rejects_words(self):
        with pytest.raises(InvalidInputError):
            Partition(["a", "b"], 2)

    def test_partition_rejects_out_of_range(self):
        with pytest.raises(InvalidInputError):
            Partition([0, 2], 2)

    def test_partition_members_are_disjoint_cover(self):
        partition = Partition([1, 0, 1, 2, 0], 3)
        members = np.concatenate([partition.members(j) for j in range(3)])
        assert sorted(members.tolist()) == list(range(5))
        assert partition.fractions().sum() == pytest.approx(1.0)


class TestDataBounds:
    def test_bounds_and_mu(self):
        bounds = data_bounds(Dataset([[3.0, 4.0], [0.0, 1.0]], [-2.0, 1.0]), 0.5)
        assert (bounds.x_norm_max, bounds.y_abs_max) == (5.0, 2.0)
        assert bounds.lipschitz_mu == pytest.approx(2.0 * (2.0 + 0.5 * 5.0))

    def test_norm_cap_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            DataBounds(1.0, 1.0, 0.0)
