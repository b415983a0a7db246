# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.core`
====================================================

Core types and the min-loss objective.

A mixture of ``k`` linear models predicts a *list* of ``k`` labels for every
covariate vector; a point is charged the squared error of the best entry of
that list. Every solver in the package optimises the mean of these per-point
min-losses and partitions the data by the winning component.

Ties are always broken towards the smallest component index.
"""

# pylint: disable=invalid-name

from dataclasses import dataclass

try:
    from typing import Any, Iterator, Sequence, Tuple
except ImportError:
    pass

import numpy as np

from mixlr.common import (
    EmptyPartError,
    InvalidInputError,
    as_matrix,
    as_vector,
    check_dimension,
    check_positive,
    frozen,
)

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"


class Dataset(object):
    """``n`` covariate vectors in ``d`` dimensions plus ``n`` scalar targets.

    >>> Dataset([[1.0], [2.0]], [1.0, 1.0])
    Dataset(n=2, d=1)
    """

    __slots__ = ("covariates", "targets")

    def __init__(self, covariates: Any, targets: Any) -> None:
        x = as_matrix(covariates, "covariates")
        y = as_vector(targets, "targets")
        if x.shape[0] < 1 or x.shape[1] < 1:
            raise InvalidInputError("a dataset needs n >= 1 and d >= 1, got %r" % (x.shape,))
        if x.shape[0] != y.shape[0]:
            raise InvalidInputError(
                "%i covariate rows but %i targets" % (x.shape[0], y.shape[0])
            )
        self.covariates = frozen(x)
        self.targets = frozen(y)

    @property
    def n(self) -> int:
        """Number of points."""
        return self.covariates.shape[0]

    @property
    def d(self) -> int:
        """Covariate dimension."""
        return self.covariates.shape[1]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return "Dataset(n=%i, d=%i)" % (self.n, self.d)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Dataset):
            return False
        return np.array_equal(self.covariates, other.covariates) and np.array_equal(
            self.targets, other.targets
        )

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.covariates.tobytes(), self.targets.tobytes()))

    def take(self, indices: Any) -> "Dataset":
        """Returns the points at ``indices`` as a new dataset.

        :raise EmptyPartError: when ``indices`` is empty.
        """

        idx = np.asarray(indices, dtype=np.intp).reshape(-1)
        if idx.size == 0:
            raise EmptyPartError()
        return Dataset(self.covariates[idx], self.targets[idx])

    def with_bias(self) -> "Dataset":
        """Returns a copy with a constant ``1`` feature appended."""

        ones = np.ones((self.n, 1))
        return Dataset(np.hstack([self.covariates, ones]), self.targets)


class ModelSet(object):
    """``k`` parameter vectors of a common dimension ``d``.

    Plays the role of solver iterates as well as of reference optima.

    >>> ModelSet([[1.0], [-1.0]])
    ModelSet([[1.0], [-1.0]])
    """

    __slots__ = ("thetas",)

    def __init__(self, thetas: Any) -> None:
        array = as_matrix(thetas, "thetas")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise InvalidInputError("a model set needs k >= 1 and d >= 1, got %r" % (array.shape,))
        self.thetas = frozen(array)

    @classmethod
    def replicate(cls, theta: Any, k: int) -> "ModelSet":
        """Returns ``k`` copies of ``theta``."""

        vector = as_vector(theta, "theta")
        return cls(np.tile(vector, (k, 1)))

    @property
    def k(self) -> int:
        """Number of components."""
        return self.thetas.shape[0]

    @property
    def d(self) -> int:
        """Dimension of every component."""
        return self.thetas.shape[1]

    def __len__(self) -> int:
        return self.k

    def __getitem__(self, j: int) -> np.ndarray:
        return self.thetas[j]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.thetas)

    def __repr__(self) -> str:
        return "ModelSet(%r)" % self.thetas.tolist()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ModelSet):
            return False
        return np.array_equal(self.thetas, other.thetas)

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash(self.thetas.tobytes())

    def append(self, theta: Any) -> "ModelSet":
        """Returns a new model set with ``theta`` added as the last component."""

        vector = as_vector(theta, "theta")
        check_dimension(vector.shape[0], self.d, "theta")
        return ModelSet(np.vstack([self.thetas, vector]))

    def to_list(self) -> list:
        """Returns the parameters as nested Python floats."""
        return self.thetas.tolist()


class Partition(object):
    """Hard assignment of each of ``n`` points to one of ``k`` components.

    >>> Partition([0, 1, 1], 2).sizes().tolist()
    [1, 2]
    """

    __slots__ = ("labels", "k")

    def __init__(self, labels: Any, k: int) -> None:
        try:
            array = np.asarray(labels, dtype=np.intp).reshape(-1)
        except (TypeError, ValueError) as err:
            raise InvalidInputError("labels should be integers: %s" % err) from err
        if k < 1:
            raise InvalidInputError("k should be >= 1, not %r" % k)
        if array.size and (array.min() < 0 or array.max() >= k):
            raise InvalidInputError("labels should lie in [0, %i)" % k)
        self.labels = frozen(array)
        self.k = int(k)

    @property
    def n(self) -> int:
        """Number of labelled points."""
        return self.labels.shape[0]

    def __repr__(self) -> str:
        return "Partition(%r, k=%i)" % (self.labels.tolist(), self.k)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Partition):
            return False
        return self.k == other.k and np.array_equal(self.labels, other.labels)

    def __ne__(self, other: Any) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash((self.labels.tobytes(), self.k))

    def members(self, j: int) -> np.ndarray:
        """Indices of the points assigned to component ``j``, ascending."""
        return np.flatnonzero(self.labels == j)

    def sizes(self) -> np.ndarray:
        """Number of points per component."""
        return np.bincount(self.labels, minlength=self.k)

    def fractions(self) -> np.ndarray:
        """Share of the points per component; sums to 1."""
        return self.sizes() / float(self.n)


class LossReport(object):
    """Per-point min-losses, their winning components and their mean."""

    __slots__ = ("per_point_loss", "per_point_argmin", "total", "k")

    def __init__(self, per_point_loss: np.ndarray, per_point_argmin: np.ndarray, k: int) -> None:
        self.per_point_loss = frozen(np.asarray(per_point_loss, dtype=float))
        self.per_point_argmin = frozen(np.asarray(per_point_argmin, dtype=np.intp))
        self.total = float(np.mean(self.per_point_loss))
        self.k = k

    def __repr__(self) -> str:
        return "LossReport(total=%r, n=%i)" % (self.total, self.per_point_loss.shape[0])

    @property
    def partition(self) -> Partition:
        """The winning components as a `Partition`."""
        return Partition(self.per_point_argmin, self.k)


@dataclass(frozen=True)
class DataBounds:
    """Scale of a dataset: ``R = max ||x_i||``, ``b = max |y_i|`` and the
    declared model norm cap ``w``."""

    x_norm_max: float
    y_abs_max: float
    theta_norm_bound: float

    def __post_init__(self) -> None:
        check_positive(self.x_norm_max, "x_norm_max", strict=False)
        check_positive(self.y_abs_max, "y_abs_max", strict=False)
        check_positive(self.theta_norm_bound, "theta_norm_bound")

    @property
    def lipschitz_mu(self) -> float:
        """Lipschitz constant ``2(b + wR)`` of the squared loss on this domain."""
        return 2.0 * (self.y_abs_max + self.theta_norm_bound * self.x_norm_max)


def _finite_scalar(value: Any, name: str) -> float:
    number = float(value)
    if not np.isfinite(number):
        raise InvalidInputError("%s should be finite, not %r" % (name, value))
    return number


def min_loss_point(y: float, predictions: Sequence[float]) -> Tuple[float, int]:
    """Squared-error min-loss of a single target against a prediction list.

    :param float y: the observed target
    :param predictions: the ``k`` candidate predictions
    :return: ``(loss, winner)``, the winner being the smallest index attaining
        the minimum.

    >>> min_loss_point(1.0, [1.0, 5.0])
    (0.0, 0)
    >>> min_loss_point(2.0, [0.0])
    (4.0, 0)
    >>> min_loss_point(0.5, [0.0, 1.0])
    (0.25, 0)
    """

    target = _finite_scalar(y, "y")
    preds = as_vector(predictions, "predictions")
    if preds.shape[0] < 1:
        raise InvalidInputError("at least one prediction is required")
    losses = (target - preds) ** 2
    winner = int(np.argmin(losses))
    return float(losses[winner]), winner


def predict_list(models: ModelSet, x: Any) -> np.ndarray:
    """Returns the ``k`` predictions ``<theta_j, x>`` for one covariate vector.

    >>> predict_list(ModelSet([[1.0], [-1.0]]), [2.0]).tolist()
    [2.0, -2.0]
    """

    vector = as_vector(x, "x")
    check_dimension(vector.shape[0], models.d, "x")
    return models.thetas @ vector


def prediction_matrix(data: Dataset, models: ModelSet) -> np.ndarray:
    """Returns the ``n x k`` matrix of predictions of every component on every
    point."""

    check_dimension(models.d, data.d, "models")
    return data.covariates @ models.thetas.T


def min_loss_dataset(data: Dataset, models: ModelSet) -> LossReport:
    """Evaluates the mean min-loss of ``models`` on ``data``.

    >>> data = Dataset([[1.0], [1.0]], [1.0, -1.0])
    >>> report = min_loss_dataset(data, ModelSet([[1.0], [-1.0]]))
    >>> report.total, report.per_point_argmin.tolist()
    (0.0, [0, 1])
    """

    squared = (data.targets[:, None] - prediction_matrix(data, models)) ** 2
    winners = np.argmin(squared, axis=1)
    losses = squared[np.arange(data.n), winners]
    return LossReport(losses, winners, models.k)


def assign(data: Dataset, models: ModelSet) -> Partition:
    """Assigns every point to the component with the smallest squared
    residual."""

    return min_loss_dataset(data, models).partition


def normalize(data: Dataset) -> Tuple[Dataset, float, float]:
    """Scales ``data`` into the unit bounds ``||x_i|| <= 1`` and ``|y_i| <= 1``.

    Divides only; data already inside the bounds is returned unchanged.

    :return: ``(scaled, x_scale, y_scale)``, the scales being the divisors
        applied.

    >>> scaled, xs, ys = normalize(Dataset([[3.0, 4.0]], [10.0]))
    >>> xs, ys, scaled.targets.tolist()
    (5.0, 10.0, [1.0])
    """

    x_max = float(np.max(np.linalg.norm(data.covariates, axis=1)))
    y_max = float(np.max(np.abs(data.targets)))
    x_scale = x_max if x_max > 1.0 else 1.0
    y_scale = y_max if y_max > 1.0 else 1.0
    if x_scale == 1.0 and y_scale == 1.0:
        return data, 1.0, 1.0
    return Dataset(data.covariates / x_scale, data.targets / y_scale), x_scale, y_scale


def data_bounds(data: Dataset, w: float) -> DataBounds:
    """Returns the `DataBounds` of ``data`` for the model norm cap ``w``."""

    return DataBounds(
        x_norm_max=float(np.max(np.linalg.norm(data.covariates, axis=1))),
        y_abs_max=float(np.max(np.abs(data.targets))),
        theta_norm_bound=float(w),
    )
