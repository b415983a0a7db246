# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.am`
====================================================

Gradient alternating minimisation for a mixture of ``k`` linear models.

Every iteration partitions the points by their best-fitting component and
then takes one gradient step on each component's squared loss over its part::

    theta_j <- theta_j - (gamma / n) * sum_{i in S_j} 2 (<x_i, theta_j> - y_i) x_i

The divisor is the full ``n``. A component whose part is empty is left
unchanged. Unlike classical alternating minimisation there is no exact
per-part refit inside the loop.

The module also computes the data-dependent quantities that govern the
convergence of this iteration around a reference set of models (separation,
within-part residual and gradient bias) and traces the per-iteration
contraction of the parameter error.
"""

# pylint: disable=invalid-name

import itertools
import sys
from dataclasses import dataclass

try:
    from typing import List, Optional, Tuple
except ImportError:
    pass

import adafruit_logging as logging
import numpy as np

from mixlr.common import InvalidInputError, UnsupportedSizeError, check_dimension, check_positive
from mixlr.core import Dataset, ModelSet, assign, prediction_matrix
from mixlr.randnum import check_seed, generator
from mixlr.subsample import SubsampleConfig, subsample_fit

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

log = logging.getLogger(__name__)
log.addHandler(logging.StreamHandler(sys.stderr))
log.setLevel(logging.INFO)

#: Separation reported when there is no competing component (``k == 1``).
NO_COMPETITOR = float("inf")

#: Largest ``k`` for which components are matched by trying all permutations.
MAX_ALIGN_K = 6

INIT_MODES = ("models", "gaussian", "subsample")


@dataclass(frozen=True)
class AMConfig:
    """Parameters of `am_run`.

    :param float gamma: step size
    :param int max_iters: iteration budget ``T``
    :param float tol: the run has converged once no component moves by more
        than ``tol`` in one step
    :param str init: ``models`` (use ``init_models``), ``gaussian`` (i.i.d.
        ``N(0, init_std**2)`` entries) or ``subsample`` (refitted output of a
        random-mode sub-sample search configured by ``init_subsample``)
    """

    gamma: float = 0.1
    max_iters: int = 200
    tol: float = 1e-10
    init: str = "gaussian"
    init_std: float = 1.0
    seed: int = 0
    init_models: Optional[ModelSet] = None
    init_subsample: Optional[SubsampleConfig] = None

    def __post_init__(self) -> None:
        check_positive(self.gamma, "gamma")
        if self.max_iters < 1:
            raise InvalidInputError("max_iters should be >= 1, not %r" % self.max_iters)
        check_positive(self.tol, "tol", strict=False)
        if self.init not in INIT_MODES:
            raise InvalidInputError(
                "Unsupported init: %r, try one of %s" % (self.init, ", ".join(INIT_MODES))
            )
        check_positive(self.init_std, "init_std", strict=False)
        check_seed(self.seed)
        if self.init == "models" and self.init_models is None:
            raise InvalidInputError("init 'models' needs init_models")


@dataclass(frozen=True)
class AMResult:
    """Outcome of `am_run`.

    ``trajectory`` holds every iterate including the initial one, so its
    length is ``iterations_run + 1``. ``diverged`` is set when an iterate
    became non-finite; the run then stops at the last finite iterate.
    """

    models: ModelSet
    trajectory: Tuple[ModelSet, ...]
    converged: bool
    iterations_run: int
    diverged: bool = False


@dataclass(frozen=True)
class Diagnostics:
    """Data-dependent quantities of a reference model set.

    :param float delta: smallest absolute residual of any point against a
        component it is not assigned to (`NO_COMPETITOR` when ``k == 1``)
    :param float lambda_: largest absolute residual of a point against its own
        component
    :param float mu: largest gradient norm of a point's squared loss at its
        own component
    :param fractions: share of the points assigned to each component
    :param float rho: ``(max_j ||theta_j||)**2``
    """

    delta: float
    lambda_: float
    mu: float
    fractions: Tuple[float, ...]
    rho: float

    @property
    def c_bar(self) -> float:
        """Smallest component share."""
        return min(self.fractions)

    @property
    def has_competitor(self) -> bool:
        """False for a single-component reference."""
        return self.delta != NO_COMPETITOR


def _update(data: Dataset, thetas: np.ndarray, gamma: float) -> np.ndarray:
    # divergence surfaces as non-finite entries, checked by the callers
    with np.errstate(over="ignore", invalid="ignore"):
        predictions = data.covariates @ thetas.T
        squared = (data.targets[:, None] - predictions) ** 2
        labels = np.argmin(squared, axis=1)
        updated = np.array(thetas, copy=True)
        for j in range(thetas.shape[0]):
            part = np.flatnonzero(labels == j)
            if part.size == 0:
                continue
            residuals = predictions[part, j] - data.targets[part]
            gradient = 2.0 * (data.covariates[part].T @ residuals)
            updated[j] = thetas[j] - (gamma / data.n) * gradient
    return updated


def am_step(data: Dataset, models: ModelSet, gamma: float) -> ModelSet:
    """One partition-then-gradient-step iteration.

    >>> data = Dataset([[1.0], [1.0]], [1.0, -1.0])
    >>> am_step(data, ModelSet([[1.0], [-1.0]]), 0.5)
    ModelSet([[1.0], [-1.0]])
    """

    check_dimension(models.d, data.d, "models")
    check_positive(gamma, "gamma")
    updated = _update(data, models.thetas, gamma)
    if not np.all(np.isfinite(updated)):
        raise InvalidInputError("step produced a non-finite iterate")
    return ModelSet(updated)


def _max_change(before: np.ndarray, after: np.ndarray) -> float:
    return float(np.max(np.linalg.norm(after - before, axis=1)))


def am_run(data: Dataset, cfg: AMConfig, init: ModelSet) -> AMResult:
    """Iterates `am_step` from ``init`` until the largest component move is at
    most ``cfg.tol`` or ``cfg.max_iters`` steps were taken."""

    check_dimension(init.d, data.d, "init")
    current = init
    trajectory: List[ModelSet] = [init]
    converged = False
    diverged = False
    for t in range(cfg.max_iters):
        updated = _update(data, current.thetas, cfg.gamma)
        if not np.all(np.isfinite(updated)):
            log.warning("am_run: iterate became non-finite at step %i", t + 1)
            diverged = True
            break
        change = _max_change(current.thetas, updated)
        current = ModelSet(updated)
        trajectory.append(current)
        log.debug("am_run: step %i, max change %g", t + 1, change)
        if change <= cfg.tol:
            converged = True
            break

    return AMResult(
        models=current,
        trajectory=tuple(trajectory),
        converged=converged,
        iterations_run=len(trajectory) - 1,
        diverged=diverged,
    )


def diagnostics(data: Dataset, reference: ModelSet) -> Diagnostics:
    """Computes separation, bias parameters and component shares of
    ``reference`` on ``data``.

    >>> data = Dataset([[1.0], [1.0]], [1.0, -1.0])
    >>> diag = diagnostics(data, ModelSet([[1.0], [-1.0]]))
    >>> diag.delta, diag.lambda_, diag.mu, diag.fractions
    (2.0, 0.0, 0.0, (0.5, 0.5))
    """

    residuals = np.abs(data.targets[:, None] - prediction_matrix(data, reference))
    labels = assign(data, reference).labels
    own = labels[:, None] == np.arange(reference.k)[None, :]

    others = residuals[~own]
    delta = float(np.min(others)) if others.size else NO_COMPETITOR
    own_residuals = residuals[np.arange(data.n), labels]
    lambda_ = float(np.max(own_residuals))
    # ||2 (<x, theta> - y) x|| = 2 |r| ||x||
    mu = float(np.max(2.0 * own_residuals * np.linalg.norm(data.covariates, axis=1)))
    fractions = tuple(float(f) for f in np.bincount(labels, minlength=reference.k) / data.n)
    rho = float(np.max(np.linalg.norm(reference.thetas, axis=1)) ** 2)
    return Diagnostics(delta=delta, lambda_=lambda_, mu=mu, fractions=fractions, rho=rho)


def theory_step_size(diag: Diagnostics) -> float:
    """Step size ``1 / (4 c_bar)`` of the contraction guarantee."""

    if diag.c_bar <= 0:
        raise InvalidInputError("a reference component owns no points")
    return 1.0 / (4.0 * diag.c_bar)


def align_models(models: ModelSet, reference: ModelSet) -> Tuple[int, ...]:
    """Returns the permutation ``perm`` minimising
    ``sum_j ||models[j] - reference[perm[j]]||``.

    Ties go to the lexicographically first permutation.

    :raise UnsupportedSizeError: when ``k`` exceeds `MAX_ALIGN_K`.
    """

    check_dimension(reference.d, models.d, "reference")
    if reference.k != models.k:
        raise InvalidInputError("%i models against %i references" % (models.k, reference.k))
    if models.k > MAX_ALIGN_K:
        raise UnsupportedSizeError(
            "cannot align k=%i components by permutation (max %i); "
            "pass aligned references" % (models.k, MAX_ALIGN_K)
        )
    distances = np.linalg.norm(
        models.thetas[:, None, :] - reference.thetas[None, :, :], axis=2
    )
    best_perm: Tuple[int, ...] = tuple(range(models.k))
    best_cost = float("inf")
    rows = np.arange(models.k)
    for perm in itertools.permutations(range(models.k)):
        cost = float(distances[rows, list(perm)].sum())
        if cost < best_cost:
            best_cost = cost
            best_perm = perm
    return best_perm


def _errors(models: ModelSet, aligned: np.ndarray) -> float:
    return float(np.max(np.linalg.norm(models.thetas - aligned, axis=1)))


def parameter_error(models: ModelSet, reference: ModelSet) -> float:
    """Largest distance of a component to its best-matching reference."""

    perm = align_models(models, reference)
    return _errors(models, reference.thetas[list(perm)])


def contraction_trace(result: AMResult, reference: ModelSet, align: bool = True) -> np.ndarray:
    """Per-iteration ratios of the parameter error ``max_j ||theta_j - theta*_j||``.

    Components are matched to references once, at the initial iterate. With
    ``align=False`` the references are taken as already aligned. A ``0 / 0``
    ratio is reported as 0.
    """

    initial = result.trajectory[0]
    check_dimension(reference.d, initial.d, "reference")
    if align:
        aligned = reference.thetas[list(align_models(initial, reference))]
    else:
        aligned = reference.thetas
    errors = np.array([_errors(models, aligned) for models in result.trajectory])
    before, after = errors[:-1], errors[1:]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = np.where(before > 0, after / np.where(before > 0, before, 1.0), 0.0)
    ratios[(before == 0) & (after > 0)] = np.inf
    return ratios


def gaussian_models(k: int, d: int, std: float, seed: int) -> ModelSet:
    """Random model set with i.i.d. ``N(0, std**2)`` entries."""

    return ModelSet(generator(seed).normal(0.0, std, size=(k, d)))


def perturb_models(models: ModelSet, std: float, seed: int) -> ModelSet:
    """Adds i.i.d. ``N(0, std**2)`` noise to every entry of ``models``."""

    noise = generator(seed).normal(0.0, std, size=models.thetas.shape)
    return ModelSet(models.thetas + noise)


def initial_models(data: Dataset, k: int, cfg: AMConfig) -> ModelSet:
    """Resolves the initial iterate described by ``cfg.init``."""

    if cfg.init == "models":
        check_dimension(cfg.init_models.d, data.d, "init_models")
        return cfg.init_models
    if cfg.init == "gaussian":
        return gaussian_models(k, data.d, cfg.init_std, cfg.seed)
    sub_cfg = cfg.init_subsample or SubsampleConfig(sample_size=min(150, data.n), seed=cfg.seed)
    return subsample_fit(data, k, sub_cfg).refit_models
