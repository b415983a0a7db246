# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.regression`
====================================================

Line fitting for the partition-then-fit steps: ordinary least squares and a
consensus (RANSAC-shaped) robust fit.

Least squares goes through a QR factorisation with column pivoting
(``scipy.linalg.lstsq`` with the ``gelsy`` driver), which returns the
minimum-norm minimiser when the design is rank deficient.
"""

# pylint: disable=invalid-name

from dataclasses import dataclass

try:
    from typing import Any, Optional, Tuple
except ImportError:
    pass

import numpy as np
import scipy.linalg

from mixlr.common import (
    EmptyPartError,
    InsufficientDataError,
    InvalidInputError,
    as_vector,
    check_dimension,
)
from mixlr.core import Dataset
from mixlr.randnum import check_seed, generator

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

#: Regressor names accepted by `fit_part`.
REGRESSORS = ("ls", "robust")

# Absolute floor on the inlier threshold, so exact fits keep their inliers.
_THRESHOLD_FLOOR = 1e-12

# Cap on the trim-and-refit rounds after the best trial is chosen.
_MAX_REFITS = 20


@dataclass(frozen=True)
class RobustConfig:
    """Parameters of `robust_fit`.

    :param int trials: number of random minimal samples tried
    :param min_sample: points per minimal sample; ``None`` means ``d + 1``
    :param float inlier_scale: a point is an inlier when its absolute residual
        is at most ``inlier_scale`` times the median absolute residual of
        the current fit
    :param int seed: seed of the sampling generator
    """

    trials: int = 100
    min_sample: Optional[int] = None
    inlier_scale: float = 1.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidInputError("trials should be >= 1, not %r" % self.trials)
        if self.min_sample is not None and self.min_sample < 1:
            raise InvalidInputError("min_sample should be >= 1, not %r" % self.min_sample)
        if not self.inlier_scale > 0:
            raise InvalidInputError("inlier_scale should be > 0, not %r" % self.inlier_scale)
        check_seed(self.seed)

    def sample_size(self, d: int) -> int:
        """Minimal sample size for dimension ``d``."""
        return self.min_sample if self.min_sample is not None else d + 1


def _part(data: Dataset, indices: Any) -> Tuple[np.ndarray, np.ndarray]:
    if indices is None:
        return data.covariates, data.targets
    idx = np.asarray(indices, dtype=np.intp).reshape(-1)
    return data.covariates[idx], data.targets[idx]


def _solve(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    theta, _, _, _ = scipy.linalg.lstsq(x, y, lapack_driver="gelsy", check_finite=False)
    return theta


def least_squares(data: Dataset, indices: Any = None) -> np.ndarray:
    """Least-squares fit over the points at ``indices`` (all points if
    ``None``).

    :return: the minimum-norm minimiser of ``sum (y_i - <theta, x_i>)**2``
    :raise EmptyPartError: when the part is empty.

    >>> data = Dataset([[1.0], [2.0]], [1.0, 1.0])
    >>> round(float(least_squares(data)[0]), 12)
    0.6
    """

    x, y = _part(data, indices)
    if y.shape[0] == 0:
        raise EmptyPartError()
    return _solve(x, y)


def sq_error(data: Dataset, theta: Any, indices: Any = None) -> float:
    """Sum (not mean) of squared residuals of ``theta`` over the part.

    >>> sq_error(Dataset([[1.0]], [1.0]), [0.0])
    1.0
    """

    vector = as_vector(theta, "theta")
    check_dimension(vector.shape[0], data.d, "theta")
    x, y = _part(data, indices)
    residuals = y - x @ vector
    return float(residuals @ residuals)


def robust_fit(data: Dataset, cfg: RobustConfig, indices: Any = None) -> np.ndarray:
    """Consensus fit resistant to points that belong to other lines.

    Every trial fits a random minimal sample and the trial with the smallest
    median absolute residual over the part wins (ties: earliest). The winner
    is then refitted by least squares on its inliers, the points whose
    absolute residual is within ``cfg.inlier_scale`` times the median
    absolute residual, and the trim-and-refit round repeats until the inlier
    set stops changing. Deterministic given ``cfg.seed``.

    :raise InsufficientDataError: when the part is smaller than the minimal
        sample.
    """

    x, y = _part(data, indices)
    m = y.shape[0]
    sample = cfg.sample_size(data.d)
    if m < sample:
        raise InsufficientDataError(m, sample)
    if m == sample:
        # every trial draws the same set
        return _solve(x, y)

    rng = generator(cfg.seed)
    picks = np.argsort(rng.random((cfg.trials, m)), axis=1)[:, :sample]
    # batched minimum-norm fits of every minimal sample
    thetas = np.einsum("tij,tj->ti", np.linalg.pinv(x[picks]), y[picks])
    medians = np.median(np.abs(y[None, :] - thetas @ x.T), axis=1)
    # argmin keeps the earliest of tied trials
    theta = thetas[int(np.argmin(medians))]
    mask = None
    for _ in range(_MAX_REFITS):
        residuals = np.abs(y - x @ theta)
        threshold = max(cfg.inlier_scale * float(np.median(residuals)), _THRESHOLD_FLOOR)
        inliers = residuals <= threshold
        if not inliers.any() or (mask is not None and np.array_equal(inliers, mask)):
            break
        mask = inliers
        theta = _solve(x[mask], y[mask])
    return theta


def fit_part(
    data: Dataset,
    indices: Any,
    regressor: str = "ls",
    robust: Optional[RobustConfig] = None,
    min_part_size: int = 1,
) -> np.ndarray:
    """Fits one part of a labelling.

    Parts with fewer than ``max(min_part_size, 1)`` points fit to the zero
    vector. A robust part smaller than the robust minimal sample falls back to
    least squares.
    """

    idx = np.asarray(indices, dtype=np.intp).reshape(-1)
    if idx.size < max(min_part_size, 1):
        return np.zeros(data.d)
    if regressor == "ls":
        return least_squares(data, idx)
    if regressor == "robust":
        cfg = robust or RobustConfig()
        if idx.size < cfg.sample_size(data.d):
            return least_squares(data, idx)
        return robust_fit(data, cfg, idx)
    raise InvalidInputError(
        "Unsupported regressor: %r, try one of %s" % (regressor, ", ".join(REGRESSORS))
    )
