# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.subsample`
====================================================

Sub-sample search for the empirical min-loss minimiser.

A small set ``A`` of points is drawn with replacement. Every labelling of
``A`` into ``k`` (possibly empty) ordered parts, or ``h`` random labellings in
the anytime variant, yields one candidate: a line is fitted to each part, the
full dataset is partitioned by those lines and the candidate is scored by the
resulting mean min-loss. The best candidate wins, and its lines are refitted
on the parts they induce on the full dataset.

A brute-force search over every labelling of the full dataset serves as the
exact oracle on tiny instances.
"""

# pylint: disable=invalid-name

import itertools
import math
import sys
from dataclasses import dataclass, field
from typing import NamedTuple

try:
    from typing import Any, Iterator, Optional, Tuple
except ImportError:
    pass

import adafruit_logging as logging
import numpy as np

from mixlr.common import (
    ENUMERATION_CAP,
    EnumerationTooLargeError,
    InvalidInputError,
    check_positive,
)
from mixlr.core import Dataset, ModelSet, Partition, assign, min_loss_dataset
from mixlr.randnum import check_seed, generator, substreams
from mixlr.regression import REGRESSORS, RobustConfig, fit_part

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

log = logging.getLogger(__name__)
log.addHandler(logging.StreamHandler(sys.stderr))
log.setLevel(logging.INFO)

MODES = ("exhaustive", "random")


@dataclass(frozen=True)
class SubsampleConfig:
    """Parameters of `subsample_fit`.

    :param int sample_size: ``|A|``, the number of points drawn with
        replacement
    :param str mode: ``exhaustive`` visits all ``k**|A|`` labellings,
        ``random`` visits ``h`` uniformly random ones
    :param int h: number of random labellings
    :param str regressor: ``ls`` or ``robust``, used for the candidate fits
        and for the final refit
    :param bool use_all: take ``A`` to be the whole dataset instead of drawing
    """

    sample_size: int = 150
    mode: str = "random"
    h: int = 1000
    regressor: str = "ls"
    robust: RobustConfig = field(default_factory=RobustConfig)
    seed: int = 0
    min_part_size: int = 1
    use_all: bool = False
    enumeration_cap: int = ENUMERATION_CAP

    def __post_init__(self) -> None:
        if self.sample_size < 1:
            raise InvalidInputError("sample_size should be >= 1, not %r" % self.sample_size)
        if self.mode not in MODES:
            raise InvalidInputError(
                "Unsupported mode: %r, try one of %s" % (self.mode, ", ".join(MODES))
            )
        if self.h < 1:
            raise InvalidInputError("h should be >= 1, not %r" % self.h)
        if self.regressor not in REGRESSORS:
            raise InvalidInputError(
                "Unsupported regressor: %r, try one of %s"
                % (self.regressor, ", ".join(REGRESSORS))
            )
        if self.min_part_size < 0:
            raise InvalidInputError("min_part_size should be >= 0, not %r" % self.min_part_size)
        check_positive(self.enumeration_cap, "enumeration_cap")
        check_seed(self.seed)


class SubsampleResult(NamedTuple):
    """Outcome of `subsample_fit`."""

    models: ModelSet
    score: float
    refit_models: ModelSet
    candidates_evaluated: int


def draw_subsample(data: Dataset, size: int, seed: int) -> np.ndarray:
    """Draws ``size`` indices uniformly from ``[0, n)`` with replacement."""

    if size < 1:
        raise InvalidInputError("size should be >= 1, not %r" % size)
    return generator(seed).integers(0, data.n, size=size)


def enumerate_assignments(m: int, k: int, cap: int = ENUMERATION_CAP) -> Iterator[np.ndarray]:
    """Yields all ``k**m`` label vectors of length ``m`` in lexicographic order.

    :raise EnumerationTooLargeError: when ``k**m`` exceeds ``cap``.

    >>> [labels.tolist() for labels in enumerate_assignments(2, 2)]
    [[0, 0], [0, 1], [1, 0], [1, 1]]
    """

    if m < 1 or k < 1:
        raise InvalidInputError("m and k should be >= 1, got m=%r, k=%r" % (m, k))
    count = k**m
    if count > cap:
        raise EnumerationTooLargeError(count, cap)
    for labels in itertools.product(range(k), repeat=m):
        yield np.array(labels, dtype=np.intp)


def _fit_parts(
    data: Dataset,
    indices: np.ndarray,
    labels: np.ndarray,
    k: int,
    regressor: str,
    robust: Optional[RobustConfig],
    min_part_size: int,
) -> ModelSet:
    return ModelSet(
        [
            fit_part(data, indices[labels == j], regressor, robust, min_part_size)
            for j in range(k)
        ]
    )


def evaluate_candidate(
    data: Dataset,
    a_indices: Any,
    labels: Any,
    k: int,
    regressor: str = "ls",
    robust: Optional[RobustConfig] = None,
    min_part_size: int = 1,
) -> Tuple[ModelSet, float]:
    """Fits one line per part of the labelled sub-sample and scores the lines
    by their mean min-loss on the full dataset.

    :return: ``(models, score)``
    """

    idx = np.asarray(a_indices, dtype=np.intp).reshape(-1)
    lab = np.asarray(labels, dtype=np.intp).reshape(-1)
    if lab.shape != idx.shape:
        raise InvalidInputError("%i labels for %i sub-sample points" % (lab.size, idx.size))
    models = _fit_parts(data, idx, lab, k, regressor, robust, min_part_size)
    return models, min_loss_dataset(data, models).total


def refit(
    data: Dataset,
    models: ModelSet,
    regressor: str = "ls",
    robust: Optional[RobustConfig] = None,
    min_part_size: int = 1,
) -> ModelSet:
    """Refits every line on the points it wins over the full dataset.

    A line that wins fewer than ``max(min_part_size, 1)`` points is kept
    unchanged.
    """

    partition = assign(data, models)
    thetas = []
    for j in range(models.k):
        members = partition.members(j)
        if members.size < max(min_part_size, 1):
            thetas.append(models[j])
        else:
            thetas.append(fit_part(data, members, regressor, robust, min_part_size))
    return ModelSet(thetas)


def _candidates(m: int, k: int, cfg: SubsampleConfig) -> Iterator[np.ndarray]:
    if cfg.mode == "exhaustive":
        return enumerate_assignments(m, k, cfg.enumeration_cap)
    rng = substreams(cfg.seed, 2)[1]
    return (rng.integers(0, k, size=m) for _ in range(cfg.h))


def subsample_fit(data: Dataset, k: int, cfg: SubsampleConfig) -> SubsampleResult:
    """Searches labellings of a sub-sample for the best set of ``k`` lines.

    Ties on the score keep the first candidate encountered.
    """

    if k < 1:
        raise InvalidInputError("k should be >= 1, not %r" % k)
    if cfg.use_all:
        a_indices = np.arange(data.n)
    else:
        a_indices = draw_subsample(data, cfg.sample_size, cfg.seed)
    if cfg.mode == "exhaustive":
        log.info(
            "subsample_fit: enumerating %i labelings of %i points",
            k**a_indices.size,
            a_indices.size,
        )

    best_models: Optional[ModelSet] = None
    best_score = math.inf
    evaluated = 0
    for labels in _candidates(a_indices.size, k, cfg):
        models, score = evaluate_candidate(
            data, a_indices, labels, k, cfg.regressor, cfg.robust, cfg.min_part_size
        )
        evaluated += 1
        if best_models is None or score < best_score:
            log.debug("subsample_fit: candidate %i improves to %g", evaluated, score)
            best_models, best_score = models, score

    refit_models = refit(data, best_models, cfg.regressor, cfg.robust, cfg.min_part_size)
    return SubsampleResult(best_models, best_score, refit_models, evaluated)


def brute_force_erm(data: Dataset, k: int, cap: int = ENUMERATION_CAP) -> Tuple[ModelSet, float]:
    """Exact empirical min-loss minimiser by trying all ``k**n`` labellings.

    Each labelling is scored by the mean min-loss of its per-part
    least-squares lines (empty parts fit the zero vector). The optimal lines
    induce a labelling under which each is its own part's least-squares fit,
    so the minimum over labellings is the global optimum.

    >>> models, optimum = brute_force_erm(Dataset([[1.0], [1.0]], [1.0, -1.0]), 2)
    >>> optimum
    0.0
    """

    indices = np.arange(data.n)
    best_models: Optional[ModelSet] = None
    best_score = math.inf
    for labels in enumerate_assignments(data.n, k, cap):
        models, score = evaluate_candidate(data, indices, labels, k)
        if best_models is None or score < best_score:
            best_models, best_score = models, score
    return best_models, best_score


def oracle_fit(
    data: Dataset,
    partition: Partition,
    regressor: str = "ls",
    robust: Optional[RobustConfig] = None,
) -> ModelSet:
    """Fits one line per known component of ``partition``."""

    if partition.n != data.n:
        raise InvalidInputError("%i labels for %i points" % (partition.n, data.n))
    return _fit_parts(
        data, np.arange(data.n), partition.labels, partition.k, regressor, robust, 1
    )


def recommended_sample_size(
    k: int,
    d: int,
    alpha: float,
    lambda_min: float,
    delta: float,
    epsilon: float,
    multiplier: float = 1.0,
) -> int:
    """Sub-sample size ``ceil(c / eps**2 * k**2 * alpha / lambda_min * (d + ln(k / delta)))``
    for an ``epsilon`` additive approximation with probability ``1 - 2 delta``.

    The universal constant ``c`` is unknown and exposed as ``multiplier``.

    >>> recommended_sample_size(1, 1, 1.0, 1.0, 0.5, 1.0)
    2
    """

    for name, value in (
        ("k", k),
        ("d", d),
        ("lambda_min", lambda_min),
        ("epsilon", epsilon),
        ("multiplier", multiplier),
    ):
        check_positive(value, name)
    if not 0 < alpha <= 1:
        raise InvalidInputError("alpha should lie in (0, 1], not %r" % alpha)
    if not 0 < delta < 1:
        raise InvalidInputError("delta should lie in (0, 1), not %r" % delta)
    size = multiplier / epsilon**2 * k**2 * (alpha / lambda_min) * (d + math.log(k / delta))
    return int(math.ceil(size))
