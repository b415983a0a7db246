# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.datagen`
====================================================

Synthetic datasets, deterministic train/test splits and flat-file storage.

Generators:

* `gen_mixture_linear` draws points from ``k`` noisy linear models with
  covariates on the unit ball, optionally with a per-component intercept.
* `gen_friedman` draws the three classic non-linear Friedman benchmarks.

Datasets are stored as UTF-8 CSV with a mandatory header: the first column is
the target ``y``, the remaining columns (``f0 .. f{d-1}`` when written by this
module) are the covariates. Floats are written in their shortest round-trip
form, so a saved dataset loads back bit for bit.
"""

# pylint: disable=invalid-name

import csv
import io
import math
from dataclasses import dataclass

try:
    from typing import Optional, Sequence, Tuple
except ImportError:
    pass

import numpy as np

from mixlr.common import InvalidInputError, ParseError, check_positive
from mixlr.core import Dataset, ModelSet, Partition
from mixlr.randnum import check_seed, generator, uniform_ball
from mixlr.transform import dumps, models_document, parse_models

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

FRIEDMAN_DIMENSIONS = {1: 5, 2: 4, 3: 4}


@dataclass(frozen=True)
class MixtureSpec:
    """Parameters of `gen_mixture_linear`.

    :param biases: per-component intercepts; when any is nonzero a constant
        ``1`` feature is appended to the covariates and the intercepts become
        the last coefficient of the true models
    :param component_weights: component probabilities; ``None`` means uniform
    :param float theta_scale: true coefficients are ``theta_scale`` times
        standard normal draws
    """

    k: int
    d: int
    n: int
    noise_std: float = 0.0
    biases: Optional[Tuple[float, ...]] = None
    component_weights: Optional[Tuple[float, ...]] = None
    theta_scale: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("k", "d", "n"):
            if getattr(self, name) < 1:
                raise InvalidInputError("%s should be >= 1, not %r" % (name, getattr(self, name)))
        check_positive(self.noise_std, "noise_std", strict=False)
        check_positive(self.theta_scale, "theta_scale")
        if self.biases is not None and len(self.biases) != self.k:
            raise InvalidInputError("%i biases for k=%i" % (len(self.biases), self.k))
        if self.component_weights is not None:
            weights = np.asarray(self.component_weights, dtype=float)
            if weights.shape != (self.k,) or np.any(weights < 0):
                raise InvalidInputError("component_weights should be %i probabilities" % self.k)
            if not math.isclose(float(weights.sum()), 1.0, rel_tol=0, abs_tol=1e-9):
                raise InvalidInputError("component_weights should sum to 1")
        check_seed(self.seed)

    def weights(self) -> np.ndarray:
        """Component probabilities as an array."""
        if self.component_weights is None:
            return np.full(self.k, 1.0 / self.k)
        weights = np.asarray(self.component_weights, dtype=float)
        return weights / weights.sum()


@dataclass(frozen=True)
class SplitSpec:
    """Parameters of `train_test_split`."""

    train_fraction: float = 0.8
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction < 1.0:
            raise InvalidInputError(
                "train_fraction should lie in (0, 1), not %r" % self.train_fraction
            )
        check_seed(self.seed)


def gen_mixture_linear(spec: MixtureSpec) -> Tuple[Dataset, ModelSet, Partition]:
    """Draws a dataset from a mixture of noisy linear models.

    :return: ``(data, true_models, true_labels)``
    """

    rng = generator(spec.seed)
    thetas = rng.standard_normal((spec.k, spec.d)) * spec.theta_scale
    labels = rng.choice(spec.k, size=spec.n, p=spec.weights())
    x = uniform_ball(rng, spec.n, spec.d)
    noise = rng.normal(0.0, spec.noise_std, size=spec.n)

    biases = np.zeros(spec.k) if spec.biases is None else np.asarray(spec.biases, dtype=float)
    if np.any(biases != 0):
        x = np.hstack([x, np.ones((spec.n, 1))])
        thetas = np.hstack([thetas, biases[:, None]])
    # the same product min_loss_dataset evaluates, so noiseless data fits exactly
    clean = (x @ thetas.T)[np.arange(spec.n), labels]
    y = clean + noise if spec.noise_std > 0 else clean
    return Dataset(x, y), ModelSet(thetas), Partition(labels, spec.k)


def friedman_response(variant: int, x: np.ndarray) -> np.ndarray:
    """Noiseless Friedman response for covariates ``x`` (one row per point).

    * variant 1: ``10 sin(pi x0 x1) + 20 (x2 - 0.5)**2 + 10 x3 + 5 x4``
    * variant 2: ``sqrt(x0**2 + (x1 x2 - 1 / (x1 x3))**2)``
    * variant 3: ``atan((x1 x2 - 1 / (x1 x3)) / x0)``

    >>> round(float(friedman_response(1, np.full((1, 5), 0.5))[0]), 7)
    14.5710678
    """

    if variant not in FRIEDMAN_DIMENSIONS:
        raise InvalidInputError("Friedman variant should be 1, 2 or 3, not %r" % variant)
    x = np.asarray(x, dtype=float)
    if variant == 1:
        return (
            10.0 * np.sin(np.pi * x[:, 0] * x[:, 1])
            + 20.0 * (x[:, 2] - 0.5) ** 2
            + 10.0 * x[:, 3]
            + 5.0 * x[:, 4]
        )
    inner = x[:, 1] * x[:, 2] - 1.0 / (x[:, 1] * x[:, 3])
    if variant == 2:
        return np.sqrt(x[:, 0] ** 2 + inner**2)
    return np.arctan(inner / x[:, 0])


def gen_friedman(variant: int, n: int, noise_std: float, seed: int) -> Dataset:
    """Draws ``n`` points of a Friedman benchmark.

    Variant 1 has five covariates uniform on ``[0, 1]``. Variants 2 and 3 have
    four, uniform on ``[0, 100] x [40 pi, 560 pi] x [0, 1] x [1, 11]``.
    """

    if variant not in FRIEDMAN_DIMENSIONS:
        raise InvalidInputError("Friedman variant should be 1, 2 or 3, not %r" % variant)
    if n < 1:
        raise InvalidInputError("n should be >= 1, not %r" % n)
    check_positive(noise_std, "noise_std", strict=False)
    rng = generator(seed)
    if variant == 1:
        x = rng.uniform(size=(n, 5))
    else:
        x = rng.uniform(size=(n, 4))
        x[:, 0] *= 100.0
        x[:, 1] = 40.0 * np.pi + x[:, 1] * 520.0 * np.pi
        x[:, 3] = 1.0 + x[:, 3] * 10.0
    y = friedman_response(variant, x) + rng.normal(0.0, noise_std, size=n)
    return Dataset(x, y)


def split_indices(n: int, spec: SplitSpec) -> Tuple[np.ndarray, np.ndarray]:
    """Train and test indices of `train_test_split` for ``n`` points.

    :raise InvalidInputError: when either side would be empty.

    >>> [part.size for part in split_indices(10, SplitSpec())]
    [8, 2]
    """

    n_train = int(round(spec.train_fraction * n))
    if n_train < 1 or n_train >= n:
        raise InvalidInputError(
            "train fraction %r leaves an empty side for n=%i" % (spec.train_fraction, n)
        )
    order = generator(spec.seed).permutation(n)
    return order[:n_train], order[n_train:]


def train_test_split(data: Dataset, spec: SplitSpec) -> Tuple[Dataset, Dataset]:
    """Shuffles ``data`` with ``spec.seed`` and cuts it into a train prefix of
    ``round(train_fraction * n)`` points and a test suffix."""

    train, test = split_indices(data.n, spec)
    return data.take(train), data.take(test)


def save_csv(data: Dataset, path: str) -> None:
    """Writes ``data`` as CSV with the header ``y,f0,...``."""

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["y"] + ["f%i" % j for j in range(data.d)])
        for target, row in zip(data.targets.tolist(), data.covariates.tolist()):
            writer.writerow([repr(target)] + [repr(value) for value in row])


def load_csv(path: str) -> Dataset:
    """Reads a CSV dataset written by `save_csv` (or any CSV with a ``y``
    first column and a header row).

    A leading byte-order mark is ignored.

    :raise ParseError: on bytes that are not UTF-8, a missing header, a row of
        the wrong width or a non-numeric or non-finite cell, naming the
        offending line.
    """

    with open(path, "rb") as handle:
        raw = handle.read()
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as err:
        raise ParseError(raw.count(b"\n", 0, err.start) + 1, "not UTF-8 text") from err

    rows = []
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader, None)
        if header is None:
            raise ParseError(1, "empty file, expected a header row")
        if len(header) < 2 or header[0].strip() != "y":
            raise ParseError(1, "header should start with 'y' followed by features")
        width = len(header)
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != width:
                raise ParseError(line, "expected %i columns, found %i" % (width, len(row)))
            try:
                values = [float(cell) for cell in row]
            except ValueError as err:
                raise ParseError(line, "non-numeric cell: %s" % err) from err
            if not all(math.isfinite(value) for value in values):
                raise ParseError(line, "non-finite cell")
            rows.append(values)
    except csv.Error as err:
        raise ParseError(max(reader.line_num, 1), "malformed CSV: %s" % err) from err
    if not rows:
        raise ParseError(2, "no data rows")
    table = np.array(rows, dtype=float)
    return Dataset(table[:, 1:], table[:, 0])


def save_models(models: ModelSet, path: str, labels: Optional[Partition] = None) -> None:
    """Writes ``models`` (and optionally true labels) as JSON."""

    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(models_document(models, labels)))


def load_models(path: str) -> Tuple[ModelSet, Optional[Partition]]:
    """Reads a model file written by `save_models`."""

    with open(path, "r", encoding="utf-8") as handle:
        return parse_models(handle.read())


def parse_floats(text: str, name: str) -> Sequence[float]:
    """Parses a comma separated list of floats, as given on the command line.

    >>> parse_floats("100, 0", "biases")
    [100.0, 0.0]
    """

    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as err:
        raise InvalidInputError("%s should be comma separated numbers: %r" % (name, text)) from err
