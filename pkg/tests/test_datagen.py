# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""Tests for mixlr.datagen and mixlr.transform."""

import numpy as np
import pytest

from mixlr.common import InvalidInputError, ParseError
from mixlr.core import Dataset, ModelSet, min_loss_dataset
from mixlr.datagen import (
    MixtureSpec,
    SplitSpec,
    friedman_response,
    gen_friedman,
    gen_mixture_linear,
    load_csv,
    load_models,
    parse_floats,
    save_csv,
    save_models,
    split_indices,
    train_test_split,
)
from mixlr.transform import dataset_digest, dumps, parse_models


class TestMixture:
    def test_single_noiseless_component_fits_exactly(self):
        data, truth, _ = gen_mixture_linear(MixtureSpec(k=1, d=4, n=50, seed=1))
        assert min_loss_dataset(data, truth).total == 0.0

    def test_covariates_on_unit_ball(self):
        data, _, _ = gen_mixture_linear(MixtureSpec(k=3, d=5, n=300, seed=2))
        assert np.all(np.linalg.norm(data.covariates, axis=1) <= 1.0 + 1e-12)

    def test_degenerate_weights(self):
        spec = MixtureSpec(k=2, d=2, n=40, component_weights=(1.0, 0.0), seed=3)
        _, _, labels = gen_mixture_linear(spec)
        assert labels.labels.tolist() == [0] * 40

    def test_biases_add_constant_feature(self):
        spec = MixtureSpec(k=2, d=3, n=20, biases=(100.0, 0.0), seed=4)
        data, truth, _ = gen_mixture_linear(spec)
        assert data.d == 4
        assert data.covariates[:, -1].tolist() == [1.0] * 20
        assert truth.thetas[:, -1].tolist() == [100.0, 0.0]

    def test_zero_biases_keep_dimension(self):
        spec = MixtureSpec(k=2, d=3, n=20, biases=(0.0, 0.0))
        assert gen_mixture_linear(spec)[0].d == 3

    def test_noise_level(self):
        data, truth, _ = gen_mixture_linear(MixtureSpec(k=1, d=2, n=20000, noise_std=2.0, seed=5))
        residuals = data.targets - data.covariates @ truth.thetas[0]
        assert np.std(residuals) == pytest.approx(2.0, rel=0.05)

    def test_reproducible(self):
        spec = MixtureSpec(k=2, d=3, n=30, noise_std=0.5, seed=6)
        first, second = gen_mixture_linear(spec), gen_mixture_linear(spec)
        assert dataset_digest(first[0]) == dataset_digest(second[0])
        assert first[1] == second[1]

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"k": 0},
            {"n": 0},
            {"noise_std": -1.0},
            {"biases": (1.0,)},
            {"component_weights": (0.7, 0.7)},
            {"component_weights": (1.5, -0.5)},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(InvalidInputError):
            MixtureSpec(**{"k": 2, "d": 2, "n": 10, **kwargs})


class TestFriedman:
    def test_centre_of_first_benchmark(self):
        assert friedman_response(1, np.full((1, 5), 0.5))[0] == pytest.approx(14.5710678, abs=1e-7)

    @pytest.mark.parametrize("variant, d", [(1, 5), (2, 4), (3, 4)])
    def test_dimensions(self, variant, d):
        data = gen_friedman(variant, 25, 0.0, 1)
        assert (data.n, data.d) == (25, d)

    def test_third_benchmark_is_an_angle(self):
        data = gen_friedman(3, 500, 0.0, 2)
        assert np.all(np.abs(data.targets) <= np.pi / 2)

    def test_second_benchmark_ranges(self):
        x = gen_friedman(2, 500, 0.0, 3).covariates
        assert x[:, 0].min() >= 0 and x[:, 0].max() <= 100
        assert x[:, 1].min() >= 40 * np.pi and x[:, 1].max() <= 560 * np.pi
        assert x[:, 3].min() >= 1 and x[:, 3].max() <= 11

    def test_noiseless_targets_follow_response(self):
        data = gen_friedman(1, 10, 0.0, 4)
        np.testing.assert_array_equal(data.targets, friedman_response(1, data.covariates))

    def test_unknown_variant(self):
        with pytest.raises(InvalidInputError):
            gen_friedman(4, 10, 0.0, 0)

    def test_reproducible(self):
        assert dataset_digest(gen_friedman(2, 30, 1.0, 7)) == dataset_digest(
            gen_friedman(2, 30, 1.0, 7)
        )


class TestSplit:
    def test_sizes(self):
        train, test = split_indices(10, SplitSpec(0.8, 3))
        assert (train.size, test.size) == (8, 2)

    def test_partition_of_points(self, noiseless_mixture):
        data = noiseless_mixture[0]
        train, test = train_test_split(data, SplitSpec(0.7, 1))
        assert train.n + test.n == data.n
        merged = np.sort(np.concatenate([train.targets, test.targets]))
        np.testing.assert_array_equal(merged, np.sort(data.targets))

    def test_seeded(self):
        first = split_indices(50, SplitSpec(0.5, 9))
        second = split_indices(50, SplitSpec(0.5, 9))
        np.testing.assert_array_equal(first[0], second[0])

    def test_empty_side(self):
        with pytest.raises(InvalidInputError):
            split_indices(2, SplitSpec(0.9))

    @pytest.mark.parametrize("fraction", [0.0, 1.0])
    def test_fraction_range(self, fraction):
        with pytest.raises(InvalidInputError):
            SplitSpec(fraction)


class TestCsv:
    def test_round_trip_is_exact(self, tmp_path):
        data = gen_mixture_linear(MixtureSpec(k=2, d=3, n=25, noise_std=0.3, seed=8))[0]
        path = str(tmp_path / "data.csv")
        save_csv(data, path)
        assert dataset_digest(load_csv(path)) == dataset_digest(data)

    def test_header_and_layout(self, tmp_path):
        path = tmp_path / "data.csv"
        save_csv(Dataset([[1.0, 2.0]], [0.5]), str(path))
        assert path.read_text(encoding="utf-8") == "y,f0,f1\n0.5,1.0,2.0\n"

    def test_reads_foreign_feature_names(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("y,age,height\n1,2,3\n4,5,6\n\n", encoding="utf-8")
        data = load_csv(str(path))
        assert (data.n, data.d) == (2, 2)
        assert data.targets.tolist() == [1.0, 4.0]

    def test_ragged_row(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("y,f0\n1,2\n3\n", encoding="utf-8")
        with pytest.raises(ParseError) as info:
            load_csv(str(path))
        assert info.value.line == 3

    def test_non_numeric_cell(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("y,f0\n1,abc\n", encoding="utf-8")
        with pytest.raises(ParseError) as info:
            load_csv(str(path))
        assert info.value.line == 2

    def test_non_finite_cell(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("y,f0\n1,nan\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_csv(str(path))

    def test_byte_order_mark_is_ignored(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_bytes(b"\xef\xbb\xbfy,f0\n1,2\n")
        assert load_csv(str(path)).targets.tolist() == [1.0]

    def test_bytes_that_are_not_utf8(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_bytes(b"y,f0\n1,2\n\xff\xfe,3\n")
        with pytest.raises(ParseError) as info:
            load_csv(str(path))
        assert info.value.line == 3

    def test_oversized_field(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("y,f0\n1," + "9" * 200000 + "\n", encoding="utf-8")
        with pytest.raises(ParseError) as info:
            load_csv(str(path))
        assert info.value.line == 2

    @pytest.mark.parametrize("text", ["", "x,f0\n1,2\n", "y\n1\n", "y,f0\n"])
    def test_bad_header_or_no_rows(self, tmp_path, text):
        path = tmp_path / "data.csv"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(ParseError):
            load_csv(str(path))


class TestModelFiles:
    def test_round_trip_with_labels(self, tmp_path, noiseless_mixture):
        _, truth, labels = noiseless_mixture
        path = str(tmp_path / "truth.json")
        save_models(truth, path, labels)
        models, loaded = load_models(path)
        assert models == truth
        assert loaded == labels

    def test_without_labels(self, two_lines):
        models, labels = parse_models(dumps({"thetas": two_lines}))
        assert models == two_lines
        assert labels is None

    @pytest.mark.parametrize("text", ["{", "[1, 2]", '{"k": 2}'])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_models(text)

    def test_ragged_thetas_name_their_line(self):
        with pytest.raises(ParseError) as info:
            parse_models('{\n  "k": 2,\n  "thetas": [[1.0], [2.0, 3.0]]\n}')
        assert info.value.line == 3

    @pytest.mark.parametrize("labels", ["[0, 3]", '["a"]'])
    def test_bad_labels(self, labels):
        with pytest.raises(ParseError):
            parse_models('{"thetas": [[1.0], [2.0]], "labels": %s}' % labels)

    def test_json_has_no_infinities(self):
        assert dumps({"delta": float("inf")}) == '{\n  "delta": null\n}\n'


class TestDigest:
    def test_shape_matters(self):
        flat = Dataset([[1.0, 2.0]], [0.0])
        tall = Dataset([[1.0], [2.0]], [0.0, 0.0])
        assert dataset_digest(flat) != dataset_digest(tall)

    def test_is_hex_sha256(self, two_points):
        digest = dataset_digest(two_points)
        assert len(digest) == 64
        int(digest, 16)


class TestParseFloats:
    def test_blank_entries_are_skipped(self):
        assert parse_floats("1, ,2", "values") == [1.0, 2.0]

    def test_rejects_words(self):
        with pytest.raises(InvalidInputError):
            parse_floats("1,two", "values")
