# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Correlation estimators working from privatized quadrant counts. """

from privcorr.core.estimation.baseline import li_kendall_baseline
from privcorr.core.estimation.bayes import (
    BayesResult, SamplerDiagnosticError, bayes_grid_p2, bayes_mh,
    estimate_bayes
)
from privcorr.core.estimation.correlation import (
    CorrelationMatrix, EstimationError, IntervalSummary,
    InvalidCorrelationMatrixError, PosteriorDraws
)
from privcorr.core.estimation.functionals import conditional_regression_coef
from privcorr.core.estimation.mle import (
    IncompatibleMechanismError, MLEResult, NoisyCountRangeError, mle_matrix,
    mle_pair
)
from privcorr.core.estimation.projection import (
    ProjectionConvergenceError, ProjectionResult, nearest_correlation
)

__all__ = [
    "BayesResult", "CorrelationMatrix", "EstimationError",
    "IncompatibleMechanismError", "IntervalSummary",
    "InvalidCorrelationMatrixError", "MLEResult", "NoisyCountRangeError",
    "PosteriorDraws", "ProjectionConvergenceError", "ProjectionResult",
    "SamplerDiagnosticError", "bayes_grid_p2", "bayes_mh",
    "conditional_regression_coef", "estimate_bayes", "li_kendall_baseline",
    "mle_matrix", "mle_pair", "nearest_correlation",
]
