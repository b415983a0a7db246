# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.common`
====================================================

Common functionality shared by several modules: the error hierarchy and the
small validation helpers every solver uses on its inputs.
"""

try:
    from typing import Any, Optional
except ImportError:
    pass

import numpy as np

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

# pylint: disable=invalid-name

#: Default cap on the number of labelings an exhaustive search may visit.
ENUMERATION_CAP = 10**7


class MixLRError(Exception):
    """Base class for all exceptions in this package."""


class InvalidInputError(MixLRError, ValueError):
    """Raised on non-finite values, dimension mismatches and out-of-range
    parameters."""


class EmptyPartError(MixLRError, ValueError):
    """Raised when a fit is requested on an empty set of points."""

    def __init__(self, msg: Optional[str] = None):
        super().__init__(msg or "cannot fit an empty part")


class InsufficientDataError(MixLRError, ValueError):
    """Raised when a fit needs more points than it was given."""

    def __init__(self, available: int, required: int, msg: Optional[str] = None):
        super().__init__(
            msg or "%i points available, at least %i required" % (available, required)
        )
        self.available = available
        self.required = required


class EnumerationTooLargeError(MixLRError, ValueError):
    """Raised when an exhaustive enumeration would exceed its cap."""

    def __init__(self, count: int, cap: int, msg: Optional[str] = None):
        super().__init__(
            msg
            or "%i labelings exceed the enumeration cap of %i; "
            "use random mode instead" % (count, cap)
        )
        self.count = count
        self.cap = cap


class UnsupportedSizeError(MixLRError, ValueError):
    """Raised when an operation does not support the requested size."""


class ParseError(MixLRError, ValueError):
    """Raised when a data or model file cannot be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__("line %i: %s" % (line, reason))
        self.line = line
        self.reason = reason


def _as_floats(values: Any, name: str) -> np.ndarray:
    try:
        return np.asarray(values, dtype=float)
    except (TypeError, ValueError) as err:
        raise InvalidInputError(
            "%s should hold numbers in a regular shape: %s" % (name, err)
        ) from err


def as_vector(values: Any, name: str) -> np.ndarray:
    """Converts ``values`` to a finite 1-D float array.

    >>> as_vector([1, 2], "x")
    array([1., 2.])
    """

    array = _as_floats(values, name)
    if array.ndim == 0:
        array = array.reshape(1)
    if array.ndim != 1:
        raise InvalidInputError("%s should be a vector, got shape %r" % (name, array.shape))
    check_finite(array, name)
    return array


def as_matrix(values: Any, name: str) -> np.ndarray:
    """Converts ``values`` to a finite 2-D float array."""

    array = _as_floats(values, name)
    if array.ndim != 2:
        raise InvalidInputError("%s should be a matrix, got shape %r" % (name, array.shape))
    check_finite(array, name)
    return array


def check_finite(array: np.ndarray, name: str) -> None:
    """Raises `InvalidInputError` if ``array`` holds a NaN or an infinity."""

    if not np.all(np.isfinite(array)):
        raise InvalidInputError("%s contains non-finite values" % name)


def check_dimension(got: int, expected: int, name: str) -> None:
    """Raises `InvalidInputError` if ``got`` differs from ``expected``."""

    if got != expected:
        raise InvalidInputError(
            "%s has dimension %i, expected %i" % (name, got, expected)
        )


def check_positive(value: float, name: str, strict: bool = True) -> None:
    """Raises `InvalidInputError` unless ``value`` is positive (or nonnegative
    when ``strict`` is False)."""

    if not np.isfinite(value) or value < 0 or (strict and value == 0):
        raise InvalidInputError(
            "%s should be %s, not %r" % (name, "> 0" if strict else ">= 0", value)
        )


def frozen(array: np.ndarray) -> np.ndarray:
    """Returns a read-only copy of ``array``."""

    copy = np.array(array, dtype=array.dtype, copy=True)
    copy.setflags(write=False)
    return copy
