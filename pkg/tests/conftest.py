# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""Shared fixtures."""

import pytest

from mixlr.core import Dataset, ModelSet
from mixlr.datagen import MixtureSpec, gen_mixture_linear


@pytest.fixture
def two_points():
    """Two points at x = 1 on the lines y = x and y = -x."""
    return Dataset([[1.0], [1.0]], [1.0, -1.0])


@pytest.fixture
def two_lines():
    return ModelSet([[1.0], [-1.0]])


@pytest.fixture
def noiseless_mixture():
    """Realizable two-component data in three dimensions."""
    return gen_mixture_linear(MixtureSpec(k=2, d=3, n=200, seed=11))
