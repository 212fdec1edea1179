# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


# Standard library imports
import collections
import logging

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.estimation.correlation import EstimationError, check_alpha

log = logging.getLogger(__name__)

# Draws with 1 - R[predictor, control]**2 at or below this are degenerate.
DEGENERACY_TOLERANCE = 1e-12

RegressionSummary = collections.namedtuple(
    'RegressionSummary',
    ['target', 'predictor', 'control', 'mean', 'lower', 'upper', 'alpha',
     'used', 'excluded']
)


def conditional_regression_coef(draws, target, predictor, control,
                                alpha=0.05):
    """Summarize the posterior of the standardized coefficient of
    `predictor` in the latent regression of `target` on `predictor` and
    `control`:

        beta = (R[t, p] - R[t, c] * R[p, c]) / (1 - R[p, c]**2)

    Draws where R[p, c]**2 is 1 are excluded and counted.

    :param draws: a :class:`~privcorr.core.estimation.PosteriorDraws`.
    :rtype: :class:`RegressionSummary`
    :raises EstimationError: if the indices are not distinct and in range,
        or every draw is degenerate.

    """
    alpha = check_alpha(alpha)
    indices = (target, predictor, control)
    if len(set(indices)) != 3:
        msg = 'target, predictor and control must be distinct (got {idx})'
        raise EstimationError(msg.format(idx=indices))
    if not all(0 <= index < draws.p for index in indices):
        msg = 'Variable indices {idx} out of range for p={p}'
        raise EstimationError(msg.format(idx=indices, p=draws.p))
    matrices = draws.draws
    r_tp = matrices[:, target, predictor]
    r_tc = matrices[:, target, control]
    r_pc = matrices[:, predictor, control]
    denominator = 1.0 - r_pc ** 2
    usable = denominator > DEGENERACY_TOLERANCE
    excluded = int((~usable).sum())
    if excluded:
        msg = 'Excluded {count} degenerate draw(s) from the coefficient of \
{predictor} on {target}'
        log.warning(msg.format(
            count=excluded, predictor=predictor, target=target
        ))
    if not usable.any():
        raise EstimationError('Every draw is degenerate')
    beta = (r_tp[usable] - r_tc[usable] * r_pc[usable]) / denominator[usable]
    (lower, upper) = np.quantile(beta, [alpha / 2, 1 - alpha / 2])
    return RegressionSummary(
        target, predictor, control, float(beta.mean()), float(lower),
        float(upper), alpha, int(usable.sum()), excluded
    )
