# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Noise-naive maximum likelihood estimation (MLE-NN).

The count distribution is a one-parameter exponential family in eta, so
the likelihood equation for a single pair reads E_r(T) = t: the MLE of r
is the unique root of a strictly increasing function. The noisy count is
plugged in as if it were the true count, which requires it to lie in
[0, half_n]; only range-preserving mechanisms guarantee that.

"""

# Standard library imports
import collections
import logging

# Third party imports
import numpy as np
from scipy import optimize
from scipy.special import logsumexp

# Local (privcorr) imports
from privcorr.core.estimation.correlation import EstimationError, assemble
from privcorr.core.estimation.projection import nearest_correlation
from privcorr.core.likelihood import (
    R_CLAMP, log_binomial_squares, log_odds_ratios
)

log = logging.getLogger(__name__)

R_XTOL = 1e-14


class IncompatibleMechanismError(EstimationError):
    """Raised when counts released by a mechanism an estimator cannot
    model are passed to it.

    """
    pass


class NoisyCountRangeError(EstimationError):
    """Raised when a noisy count handed to the maximum likelihood
    estimator lies outside [0, half_n].

    """
    pass


MLEResult = collections.namedtuple(
    'MLEResult', ['matrix', 'pairwise', 'projection']
)


class ExpectedCount(object):
    """E_r(T) for a fixed half_n, reusing one log-binomial table."""

    def __init__(self, half_n):
        self.half_n = int(half_n)
        self.t = np.arange(self.half_n + 1)
        self.log_binom_sq = log_binomial_squares(self.half_n)

    def __call__(self, r):
        eta = float(log_odds_ratios(r))
        unnormalized = self.log_binom_sq + self.t * eta
        weights = np.exp(unnormalized - logsumexp(unnormalized))
        return float(np.dot(self.t, weights))


def mle_pair(t_noisy, half_n, expected=None):
    """Solve E_r(T) = t_noisy for r.

    :param float t_noisy: the noisy count, in [0, half_n].
    :param int half_n: the marginal total.
    :param expected: optional :class:`ExpectedCount` for `half_n`.
    :return: -1.0 when t_noisy = 0, 1.0 when t_noisy = half_n, otherwise
        the root in (-1, 1).
    :rtype: float
    :raises NoisyCountRangeError: if t_noisy is outside [0, half_n].

    Example:

        >>> mle_pair(0, 3), mle_pair(3, 3)
        (-1.0, 1.0)
        >>> abs(mle_pair(516 / 245, 3) - 0.5) < 1e-6
        True

    """
    t_noisy = float(t_noisy)
    if not 0.0 <= t_noisy <= half_n:
        msg = ('Noisy count {t} outside [0, {half_n}]; the maximum likelihood '
               'estimator needs a range-preserving mechanism')
        raise NoisyCountRangeError(msg.format(t=t_noisy, half_n=half_n))
    if t_noisy == 0.0:
        return -1.0
    if t_noisy == half_n:
        return 1.0
    if expected is None:
        expected = ExpectedCount(half_n)
    (low, high) = (-1.0 + R_CLAMP, 1.0 - R_CLAMP)
    if t_noisy <= expected(low):
        return low
    if t_noisy >= expected(high):
        return high
    return optimize.brentq(
        lambda r: expected(r) - t_noisy, low, high, xtol=R_XTOL
    )


def mle_matrix(noisy):
    """Assemble the pairwise MLEs into a matrix and project it onto the
    nearest correlation matrix when it is not positive semidefinite.

    :param noisy: a :class:`~privcorr.core.mechanisms.NoisyCountSet`
        from a range-preserving mechanism.
    :rtype: :class:`MLEResult`
    :raises IncompatibleMechanismError: for geometric-mechanism counts.

    """
    if not noisy.range_preserving:
        msg = ('Maximum likelihood estimation needs counts from a '
               'range-preserving mechanism (tgm, btgm or rgm), not '
               '{mechanism}: unbounded noisy counts may have no solution')
        raise IncompatibleMechanismError(msg.format(
            mechanism=noisy.mechanism
        ))
    expected = ExpectedCount(noisy.half_n)
    pairwise = np.array([
        mle_pair(noisy.noisy[pair], noisy.half_n, expected)
        for pair in noisy.pairs()
    ])
    projection = nearest_correlation(assemble(noisy.p, pairwise))
    if not projection.was_psd:
        msg = 'Pairwise estimates were not PSD; projected (adjustment {adj})'
        log.info(msg.format(adj=projection.frobenius_adjustment))
    return MLEResult(projection.matrix, pairwise, projection)
