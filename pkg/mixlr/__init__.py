# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
mixlr module
====================================================

List-decodable mixed linear regression: the min-loss objective over ``k``
linear models, a gradient alternating-minimisation solver, sub-sample search
for the empirical min-loss minimiser, data-dependent convergence diagnostics
and Monte-Carlo checks of the mixture class's Rademacher complexity.

**NOTE:** The solvers make no generative assumption about the data. The
models returned are the best found for the min-loss, not estimates of any
true mixture.

"""

from mixlr.am import (
    AMConfig,
    AMResult,
    Diagnostics,
    am_run,
    am_step,
    contraction_trace,
    diagnostics,
)
from mixlr.common import (
    EmptyPartError,
    EnumerationTooLargeError,
    InsufficientDataError,
    InvalidInputError,
    MixLRError,
    ParseError,
    UnsupportedSizeError,
)
from mixlr.core import (
    Dataset,
    LossReport,
    ModelSet,
    Partition,
    assign,
    min_loss_dataset,
    min_loss_point,
    normalize,
    predict_list,
)
from mixlr.regression import RobustConfig, least_squares, robust_fit
from mixlr.subsample import SubsampleConfig, brute_force_erm, subsample_fit

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"
