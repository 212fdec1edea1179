# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Likelihood of quadrant counts under a Gaussian copula.

Under a Gaussian copula with correlation r the quadrant count T of a pair
of variables, with both margins fixed at half_n, follows a noncentral
hypergeometric distribution

    Pr(T = t | r) = C(half_n, t)**2 * exp(t * eta) / C(eta)

with natural parameter eta = 2 * log((pi + 2 asin r) / (pi - 2 asin r)).
Everything here is evaluated in log space; the printed formulas overflow
for half_n in the hundreds.

"""

# Standard library imports
import collections
import logging
import math

# Third party imports
import numpy as np
from scipy.special import gammaln, logsumexp

# Local (privcorr) imports
from privcorr.core.errors import ValidationError
from privcorr.core.mechanisms import check_epsilon, geometric_log_pmf
from privcorr.core.quadrant_stats import pair_indices

log = logging.getLogger(__name__)

# Correlations are clamped to +/-(1 - R_CLAMP) wherever eta must be finite.
R_CLAMP = 1e-9


class LikelihoodError(ValidationError):
    """Base class for likelihood evaluation errors."""
    pass


class CorrelationRangeError(LikelihoodError):
    """Raised when a correlation lies outside the range an operation
    accepts.

    """
    pass


class CountOutOfRangeError(LikelihoodError):
    """Raised when a count lies outside [0, half_n]."""
    pass


class DimensionMismatchError(LikelihoodError):
    """Raised when a correlation matrix and a noisy count set disagree
    on p.

    """
    pass


class UnsupportedMechanismError(LikelihoodError):
    """Raised when the noise model of a count set is not the unbounded
    geometric mechanism.

    """
    pass


CellProbabilities = collections.namedtuple(
    'CellProbabilities', ['p11', 'p10', 'p01', 'p00']
)


def clamp_correlation(r):
    """Clamp `r` to [-1 + R_CLAMP, 1 - R_CLAMP]."""
    return float(np.clip(r, -1.0 + R_CLAMP, 1.0 - R_CLAMP))


def cell_probs(r):
    """Return the latent 2 x 2 cell probabilities for correlation `r`.

    Example:

        >>> cell_probs(0.5).p11 == 1 / 4 + math.asin(0.5) / (2 * math.pi)
        True
        >>> cell_probs(1.0).p01
        0.0

    """
    if not -1.0 <= r <= 1.0:
        msg = 'Correlation {r} outside [-1, 1]'
        raise CorrelationRangeError(msg.format(r=r))
    concordant = 0.25 + math.asin(r) / (2 * math.pi)
    discordant = 0.25 - math.asin(r) / (2 * math.pi)
    return CellProbabilities(concordant, discordant, discordant, concordant)


def log_odds_ratio(r):
    """Return eta = 2 * [log(pi + 2 asin r) - log(pi - 2 asin r)].

    Example:

        >>> log_odds_ratio(0.0)
        0.0
        >>> abs(log_odds_ratio(0.5) - math.log(4)) < 1e-12
        True

    """
    if not -1.0 < r < 1.0:
        msg = 'The log odds ratio is infinite at r={r}'
        raise CorrelationRangeError(msg.format(r=r))
    angle = 2 * math.asin(r)
    return 2 * (math.log(math.pi + angle) - math.log(math.pi - angle))


def log_odds_ratios(r):
    """Vectorized :func:`log_odds_ratio` over an array of correlations,
    clamping each to the boundary guard.

    """
    r = np.clip(np.asarray(r, dtype=float), -1.0 + R_CLAMP, 1.0 - R_CLAMP)
    angle = 2 * np.arcsin(r)
    return 2 * (np.log(np.pi + angle) - np.log(np.pi - angle))


def log_binomial_squares(half_n):
    """Return the table 2 * log C(half_n, t) for t = 0..half_n."""
    t = np.arange(half_n + 1)
    return 2 * (gammaln(half_n + 1) - gammaln(t + 1) - gammaln(half_n - t + 1))


class PairModel(object):
    """The count distribution of one variable pair at correlation r.

    The log-PMF vector is computed once per model, so repeated evaluation
    at the same r (the sampler hot path) is cheap.

    :param int half_n: the fixed marginal total.
    :param float r: the correlation, clamped to the boundary guard.
    :param log_binom_sq: optional precomputed
        :func:`log_binomial_squares` table for `half_n`.

    """

    def __init__(self, half_n, r, log_binom_sq=None):
        if int(half_n) != half_n or half_n < 1:
            msg = 'half_n must be a positive integer (got {half_n})'
            raise LikelihoodError(msg.format(half_n=half_n))
        if not -1.0 <= r <= 1.0:
            msg = 'Correlation {r} outside [-1, 1]'
            raise CorrelationRangeError(msg.format(r=r))
        self.half_n = int(half_n)
        self.r = clamp_correlation(r)
        if log_binom_sq is None:
            log_binom_sq = log_binomial_squares(self.half_n)
        self.log_binom_sq = log_binom_sq
        self._log_pmf = None

    @property
    def eta(self):
        return log_odds_ratio(self.r)

    @property
    def log_pmf(self):
        """log Pr(T = t) for t = 0..half_n."""
        if self._log_pmf is None:
            t = np.arange(self.half_n + 1)
            unnormalized = self.log_binom_sq + t * self.eta
            self._log_pmf = unnormalized - logsumexp(unnormalized)
        return self._log_pmf

    def __repr__(self):
        return '<PairModel half_n={half_n} r={r}>'.format(
            half_n=self.half_n, r=self.r
        )


def log_pmf_T(model, t):
    """Return log Pr(T = t) under `model`.

    Example:

        >>> model = PairModel(2, 0.0)
        >>> [round(float(np.exp(log_pmf_T(model, t))), 12) for t in range(3)]
        [0.166666666667, 0.666666666667, 0.166666666667]

    """
    if int(t) != t or not 0 <= t <= model.half_n:
        msg = 'Count {t} outside [0, {half_n}]'
        raise CountOutOfRangeError(msg.format(t=t, half_n=model.half_n))
    return float(model.log_pmf[int(t)])


def expected_T(model):
    """Return E(T) under `model`.

    Example:

        >>> abs(expected_T(PairModel(3, 0.5)) - 516 / 245) < 1e-10
        True

    """
    t = np.arange(model.half_n + 1)
    return float(np.dot(t, np.exp(model.log_pmf)))


def log_marginal_likelihood(model, t_noisy, epsilon_pair, delta=1):
    """Return log Pr(noisy count = t_noisy | r) when the true count is
    released with the unbounded geometric mechanism.

    :param model: the :class:`PairModel` at the correlation of interest.
    :param int t_noisy: the released count; any integer.
    :param float epsilon_pair: the budget spent on this count.
    :param float delta: the sensitivity of the count.

    """
    check_epsilon(epsilon_pair, 'epsilon_pair')
    t = np.arange(model.half_n + 1)
    noise = geometric_log_pmf(t_noisy - t, epsilon_pair, delta)
    return float(logsumexp(noise + model.log_pmf))


class CompositeLikelihood(object):
    """The pairwise composite likelihood of a geometric-mechanism
    :class:`~privcorr.core.mechanisms.NoisyCountSet`, vectorized over
    pairs.

    The noise kernel log Pr(noisy_k | t) is fixed by the data, so it is
    tabulated once as a K x (half_n + 1) array, K = p(p-1)/2.

    :raises UnsupportedMechanismError: if the counts were not released
        with the geometric mechanism.

    """

    def __init__(self, noisy):
        if noisy.mechanism != 'geometric':
            msg = ('The composite likelihood models geometric noise, but '
                   'the counts were released with {mechanism}')
            raise UnsupportedMechanismError(msg.format(
                mechanism=noisy.mechanism
            ))
        self.p = noisy.p
        self.half_n = noisy.half_n
        self.pairs = pair_indices(self.p)
        self.rows = np.array([j for (j, _) in self.pairs], dtype=int)
        self.columns = np.array([jp for (_, jp) in self.pairs], dtype=int)
        self.t = np.arange(self.half_n + 1)
        self.log_binom_sq = log_binomial_squares(self.half_n)
        observed = noisy.vector()
        self.noise_kernel = geometric_log_pmf(
            observed[:, None] - self.t[None, :],
            noisy.budget.epsilon_pair, noisy.budget.delta_sensitivity
        )

    def pair_terms(self, correlations):
        """Return the per-pair log marginal likelihoods for a vector of
        pair correlations in pair order.

        """
        eta = log_odds_ratios(correlations)
        unnormalized = self.log_binom_sq[None, :] + \
            eta[:, None] * self.t[None, :]
        log_pmf = unnormalized - logsumexp(unnormalized, axis=1)[:, None]
        return logsumexp(self.noise_kernel + log_pmf, axis=1)

    def off_diagonal(self, R):
        R = np.asarray(R, dtype=float)
        if R.shape != (self.p, self.p):
            msg = 'Correlation matrix has shape {shape}, expected p={p}'
            raise DimensionMismatchError(msg.format(shape=R.shape, p=self.p))
        return R[self.rows, self.columns]

    def __call__(self, R):
        return float(self.pair_terms(self.off_diagonal(R)).sum())


def log_composite_likelihood(R, noisy):
    """Return the sum over pairs j < j' of the log marginal likelihood of
    the noisy count of (j, j') at R[j, j'].

    :param R: a p x p correlation matrix (array-like).
    :param noisy: a geometric-mechanism noisy count set.
    :raises DimensionMismatchError: if R is not p x p.

    """
    return CompositeLikelihood(noisy)(R)
