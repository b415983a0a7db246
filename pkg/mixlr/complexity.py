# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.complexity`
====================================================

Monte-Carlo estimates of empirical Rademacher complexities.

For norm-bounded linear predictors ``{x -> <theta, x> : ||theta|| <= w}`` the
supremum over the class has the closed form
``sup sum_i s_i <theta, x_i> = w ||sum_i s_i x_i||`` (duality of the Euclidean
norm), so only the expectation over the random signs ``s`` is estimated.

For ``k``-component mixtures scored by the min-loss no closed form exists; the
supremum is approximated by the best of a finite set of random candidate model
sets. That is a *lower* bound of the true complexity, which is the safe
direction when checking an upper bound of the form
``R(mixture class) <= k * mu * R(linear class)``: a violation observed with the
lower-bound estimate is a genuine violation, up to Monte-Carlo error.
"""

# pylint: disable=invalid-name

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

try:
    from typing import Any, Optional
except ImportError:
    pass

import numpy as np

from mixlr.common import InvalidInputError, as_matrix, check_positive
from mixlr.core import Dataset, data_bounds
from mixlr.randnum import check_seed, rademacher, substreams, uniform_ball

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

#: Largest ``n`` accepted by the exact sign enumerations.
MAX_ENUMERATION_N = 20

# sign draws and candidates are processed in blocks of this many rows
_BLOCK = 256


@dataclass(frozen=True)
class ComplexityConfig:
    """Parameters of the Monte-Carlo estimators.

    :param int sigma_draws: number of random sign vectors
    :param int candidate_models: number of random model sets searched for the
        mixture supremum
    :param lipschitz_mu: Lipschitz constant of the base loss; ``None`` derives
        ``2(b + wR)`` from the data
    :param float w: model norm bound
    """

    sigma_draws: int = 2000
    candidate_models: int = 5000
    lipschitz_mu: Optional[float] = None
    w: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.sigma_draws < 1:
            raise InvalidInputError("sigma_draws should be >= 1, not %r" % self.sigma_draws)
        if self.candidate_models < 1:
            raise InvalidInputError(
                "candidate_models should be >= 1, not %r" % self.candidate_models
            )
        if self.lipschitz_mu is not None:
            check_positive(self.lipschitz_mu, "lipschitz_mu")
        check_positive(self.w, "w", strict=False)
        check_seed(self.seed)


class Estimate(NamedTuple):
    """A Monte-Carlo mean and its standard error."""

    mean: float
    stderr: float


class Theorem1Report(NamedTuple):
    """Comparison of the mixture complexity with ``k * mu`` times the linear
    one."""

    lhs: float
    lhs_stderr: float
    rhs: float
    rhs_stderr: float
    mu: float
    holds: bool


def _estimate(values: np.ndarray) -> Estimate:
    mean = float(np.mean(values))
    if values.size < 2:
        return Estimate(mean, 0.0)
    return Estimate(mean, float(np.std(values, ddof=1) / math.sqrt(values.size)))


def _all_signs(n: int) -> np.ndarray:
    if n > MAX_ENUMERATION_N:
        raise InvalidInputError(
            "sign enumeration supports n <= %i, not %i" % (MAX_ENUMERATION_N, n)
        )
    return np.array(list(itertools.product((-1.0, 1.0), repeat=n)))


def linear_rademacher(data_x: Any, w: float, cfg: ComplexityConfig) -> Estimate:
    """Estimates the complexity of ``{x -> <theta, x> : ||theta|| <= w}`` on
    the covariates ``data_x``.

    >>> linear_rademacher([[1.0, 0.0]], 1.0, ComplexityConfig(sigma_draws=10))
    Estimate(mean=1.0, stderr=0.0)
    """

    x = as_matrix(data_x, "data_x")
    check_positive(w, "w", strict=False)
    n = x.shape[0]
    signs = rademacher(substreams(cfg.seed, 1)[0], cfg.sigma_draws, n)
    values = (w / n) * np.linalg.norm(signs @ x, axis=1)
    return _estimate(values)


def linear_rademacher_exact(data_x: Any, w: float) -> float:
    """Exact expectation of `linear_rademacher` by enumerating all ``2**n``
    sign vectors."""

    x = as_matrix(data_x, "data_x")
    signs = _all_signs(x.shape[0])
    return float(np.mean((w / x.shape[0]) * np.linalg.norm(signs @ x, axis=1)))


def candidate_losses(data: Dataset, k: int, w: float, cfg: ComplexityConfig) -> np.ndarray:
    """Per-point min-losses of ``cfg.candidate_models`` random model sets.

    Every component is drawn uniformly from the radius-``w`` ball. Directions
    and radii come from separate substreams, so a larger ``candidate_models``
    extends the same candidate list.

    :return: a ``(candidate_models, n)`` matrix
    """

    if k < 1:
        raise InvalidInputError("k should be >= 1, not %r" % k)
    check_positive(w, "w", strict=False)
    _, directions, radii = substreams(cfg.seed, 3)
    count = cfg.candidate_models * k
    thetas = uniform_ball(directions, count, data.d, w, radius_rng=radii)
    thetas = thetas.reshape(cfg.candidate_models, k, data.d)
    losses = np.empty((cfg.candidate_models, data.n))
    for start in range(0, cfg.candidate_models, _BLOCK):
        block = thetas[start : start + _BLOCK]
        predictions = np.einsum("ckd,nd->cnk", block, data.covariates)
        losses[start : start + _BLOCK] = np.min(
            (data.targets[None, :, None] - predictions) ** 2, axis=2
        )
    return losses


def _suprema(signs: np.ndarray, losses: np.ndarray) -> np.ndarray:
    n = losses.shape[1]
    out = np.empty(signs.shape[0])
    for start in range(0, signs.shape[0], _BLOCK):
        block = signs[start : start + _BLOCK]
        out[start : start + _BLOCK] = np.max(block @ losses.T, axis=1) / n
    return out


def mixture_rademacher_lower(data: Dataset, k: int, w: float, cfg: ComplexityConfig) -> Estimate:
    """Lower-bound estimate of the complexity of ``k``-component mixtures of
    norm-``w`` linear models under the squared min-loss.

    For every sign vector the supremum is replaced by the maximum over the
    candidates of `candidate_losses`, so the estimate never exceeds the true
    complexity (up to Monte-Carlo error).
    """

    losses = candidate_losses(data, k, w, cfg)
    # substream 0 belongs to linear_rademacher, 1 and 2 to the candidates
    signs = rademacher(substreams(cfg.seed, 4)[3], cfg.sigma_draws, data.n)
    return _estimate(_suprema(signs, losses))


def enumerate_rademacher(losses: Any) -> float:
    """Exact expectation over all ``2**n`` sign vectors of
    ``max_c (1/n) sum_i s_i losses[c, i]`` for a fixed candidate matrix."""

    matrix = as_matrix(losses, "losses")
    return float(np.mean(_suprema(_all_signs(matrix.shape[1]), matrix)))


def check_theorem1(data: Dataset, k: int, w: float, cfg: ComplexityConfig) -> Theorem1Report:
    """Checks ``R(mixture class) <= k * mu * R(linear class)`` on ``data``.

    ``mu`` defaults to ``2(b + wR)``, the Lipschitz constant of the squared
    loss on the data's bounded domain. The bound is taken to hold when the
    left side exceeds the right by at most three combined standard errors.
    """

    if cfg.lipschitz_mu is not None:
        mu = cfg.lipschitz_mu
    elif w > 0:
        mu = data_bounds(data, w).lipschitz_mu
    else:
        mu = 2.0 * float(np.max(np.abs(data.targets)))
    lhs = mixture_rademacher_lower(data, k, w, cfg)
    rhs = linear_rademacher(data.covariates, w, cfg)
    scale = k * mu
    combined = math.sqrt(lhs.stderr**2 + (scale * rhs.stderr) ** 2)
    rhs_mean = scale * rhs.mean
    return Theorem1Report(
        lhs=lhs.mean,
        lhs_stderr=lhs.stderr,
        rhs=rhs_mean,
        rhs_stderr=scale * rhs.stderr,
        mu=mu,
        holds=bool(lhs.mean <= rhs_mean + 3.0 * combined),
    )
