# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.randnum`
====================================================

Functions for generating random numbers.

All randomness in the package flows from explicit 64-bit seeds through numpy
generators created here, so every algorithm is a deterministic function of
its seed.
"""

import os

try:
    from typing import List, Optional
except ImportError:
    pass

import numpy as np

from mixlr.common import InvalidInputError

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"

#: Environment variable consulted when no seed is given explicitly.
SEED_ENV = "MIXLR_SEED"

_SEED_MASK = (1 << 64) - 1


def check_seed(seed: int) -> int:
    """Returns ``seed`` if it is a valid unsigned 64-bit seed.

    >>> check_seed(7)
    7
    """

    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidInputError("seed should be an integer, not %s" % seed.__class__)
    if seed < 0 or seed > _SEED_MASK:
        raise InvalidInputError("seed %i is outside the unsigned 64-bit range" % seed)
    return int(seed)


def default_seed(seed: Optional[int] = None) -> int:
    """Resolves a seed: the explicit value, else ``$MIXLR_SEED``, else 0."""

    if seed is not None:
        return check_seed(seed)
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return 0
    try:
        return check_seed(int(raw.strip()))
    except ValueError as err:
        raise InvalidInputError("%s=%r is not a valid seed" % (SEED_ENV, raw)) from err


def derive_seed(seed: int, index: int) -> int:
    """Seed of run ``index`` in a repeated experiment: ``seed + index``,
    wrapped to 64 bits.

    >>> derive_seed(7, 3)
    10
    """

    return (check_seed(seed) + index) & _SEED_MASK


def generator(seed: int) -> np.random.Generator:
    """Returns a fresh generator for ``seed``."""

    return np.random.default_rng(check_seed(seed))


def substreams(seed: int, count: int) -> List[np.random.Generator]:
    """Returns ``count`` statistically independent generators derived from
    ``seed``.

    The i-th substream depends only on ``seed`` and ``i``, never on how many
    substreams were requested.
    """

    children = np.random.SeedSequence(check_seed(seed)).spawn(count)
    return [np.random.default_rng(child) for child in children]


def rademacher(rng: np.random.Generator, draws: int, n: int) -> np.ndarray:
    """Draws a ``(draws, n)`` matrix of independent uniform random signs."""

    return rng.integers(0, 2, size=(draws, n), dtype=np.int8).astype(float) * 2.0 - 1.0


def uniform_ball(
    rng: np.random.Generator,
    count: int,
    d: int,
    radius: float = 1.0,
    radius_rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Draws ``count`` points uniformly from the radius-``radius`` ball in
    ``d`` dimensions.

    Directions come from ``rng`` and radii from ``radius_rng`` (default
    ``rng``). With two separate generators the first ``m`` points are the same
    for every ``count >= m``.
    """

    directions = rng.standard_normal((count, d))
    norms = np.linalg.norm(directions, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    radii = (radius_rng or rng).random((count, 1)) ** (1.0 / d)
    return radius * radii * directions / norms
