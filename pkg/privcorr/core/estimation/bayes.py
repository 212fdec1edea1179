# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Noise-aware Bayesian estimation (Bayes-NA).

The posterior p(R | noisy counts) is proportional to the LKJ(1) prior
(uniform over correlation matrices) times the pairwise composite
likelihood, in which each noisy count is marginalized over the true count
it was released from.

Two samplers are provided:

* :func:`bayes_grid_p2` evaluates the posterior of a single correlation
  exactly on a grid (p = 2 only);
* :func:`bayes_mh` runs an adaptive random-walk Metropolis sampler on an
  unconstrained parameterization of the Cholesky factor of R.

"""

# Standard library imports
import collections
import logging
import math

# Third party imports
import numpy as np
from scipy.special import logsumexp

# Local (privcorr) imports
from privcorr.core.errors import DiagnosticError
from privcorr.core.estimation.correlation import (
    CorrelationMatrix, EstimationError, IntervalSummary, PosteriorDraws,
    assemble, check_alpha, is_psd
)
from privcorr.core.estimation.mle import IncompatibleMechanismError
from privcorr.core.estimation.projection import nearest_correlation
from privcorr.core.likelihood import (
    CompositeLikelihood, log_binomial_squares, log_odds_ratios
)
from privcorr.core.mechanisms import check_epsilon, geometric_log_pmf

log = logging.getLogger(__name__)

DEFAULT_GRID_SIZE = 2001
DEFAULT_SAMPLES = 1000
DEFAULT_BURN_IN = 1000
TARGET_ACCEPTANCE = 0.234
ACCEPTANCE_BOUNDS = (0.05, 0.95)
SAMPLERS = ('auto', 'grid', 'mh')

# Rows of the grid likelihood evaluated at once.
_GRID_CHUNK = 256
# Robbins-Monro gain decays as (iteration + 1) ** -_GAIN_DECAY.
_GAIN_DECAY = 0.6
# Iterations before the running standard deviations replace unit scales.
_SCALE_WARMUP = 100


class SamplerDiagnosticError(DiagnosticError):
    """Raised when the Metropolis acceptance rate after adaptation falls
    outside the accepted range.

    """
    pass


BayesResult = collections.namedtuple(
    'BayesResult', ['matrix', 'summary', 'draws']
)


def _check_geometric(noisy):
    if noisy.mechanism != 'geometric':
        msg = ('The noise-aware posterior models the geometric mechanism; '
               'counts released with {mechanism} are not supported')
        raise IncompatibleMechanismError(msg.format(
            mechanism=noisy.mechanism
        ))


def grid_points(grid_size):
    """Return the midpoints of `grid_size` equal cells partitioning
    (-1, 1).

    Example:

        >>> grid_points(4).tolist()
        [-0.75, -0.25, 0.25, 0.75]

    """
    if grid_size < 3:
        msg = 'grid_size must be at least 3 (got {size})'
        raise EstimationError(msg.format(size=grid_size))
    return -1.0 + (2 * np.arange(grid_size) + 1) / grid_size


def grid_log_likelihood(r_grid, t_noisy, half_n, epsilon_pair, delta=1):
    """Return the log marginal likelihood of one noisy count at each
    correlation in `r_grid`.

    """
    t = np.arange(half_n + 1)
    log_binom_sq = log_binomial_squares(half_n)
    kernel = geometric_log_pmf(t_noisy - t, epsilon_pair, delta)
    values = np.empty(len(r_grid))
    for start in range(0, len(r_grid), _GRID_CHUNK):
        eta = log_odds_ratios(r_grid[start:start + _GRID_CHUNK])
        unnormalized = log_binom_sq[None, :] + eta[:, None] * t[None, :]
        log_pmf = unnormalized - logsumexp(unnormalized, axis=1)[:, None]
        values[start:start + len(eta)] = logsumexp(
            log_pmf + kernel[None, :], axis=1
        )
    return values


def bayes_grid_p2(t_noisy, half_n, epsilon_pair, grid_size=DEFAULT_GRID_SIZE,
                  alpha=0.05, n_draws=DEFAULT_SAMPLES, rng=None, delta=1):
    """Exact grid posterior of a single correlation under a uniform prior.

    :param int t_noisy: the geometric-mechanism noisy count.
    :param int half_n: the marginal total.
    :param float epsilon_pair: the budget spent on the count.
    :param int grid_size: the number of grid cells on (-1, 1).
    :param float alpha: intervals are at alpha / 2 and 1 - alpha / 2.
    :param int n_draws: grid resamples returned as posterior draws.
    :param rng: a :class:`numpy.random.Generator`.
    :return: (summary, draws); the summary comes from the grid itself.
    :raises EstimationError: if grid_size < 3.

    """
    alpha = check_alpha(alpha)
    check_epsilon(epsilon_pair, 'epsilon_pair')
    if rng is None:
        rng = np.random.default_rng()
    r_grid = grid_points(grid_size)
    log_posterior = grid_log_likelihood(
        r_grid, t_noisy, half_n, epsilon_pair, delta
    )
    weights = np.exp(log_posterior - logsumexp(log_posterior))
    weights /= weights.sum()
    mean = float(np.dot(weights, r_grid))

    # Posterior mass is spread uniformly within each cell, so the CDF is
    # piecewise linear between cell edges.
    edges = np.linspace(-1.0, 1.0, grid_size + 1)
    cdf = np.concatenate([[0.0], np.cumsum(weights)])
    cdf[-1] = 1.0
    (lower, upper) = np.interp([alpha / 2, 1 - alpha / 2], cdf, edges)

    sampled = rng.choice(r_grid, size=n_draws, p=weights)
    draws = np.tile(np.eye(2), (n_draws, 1, 1))
    draws[:, 0, 1] = draws[:, 1, 0] = sampled
    summary = IntervalSummary([(0, 1)], [mean], [lower], [upper], alpha)
    diagnostics = {'method': 'grid', 'grid_size': int(grid_size)}
    return (summary, PosteriorDraws(draws, 0, diagnostics))


def unconstrained_size(p):
    return p * (p - 1) // 2


def cholesky_from_unconstrained(y, p):
    """Map an unconstrained vector to the Cholesky factor of a correlation
    matrix through canonical partial correlations z = tanh(y).

    :return: (L, log_jacobian) where log_jacobian is the log absolute
        determinant of the map from y to the strictly lower entries of L.

    Example:

        >>> (factor, log_jacobian) = cholesky_from_unconstrained([0.0], 2)
        >>> factor.tolist()
        [[1.0, 0.0], [0.0, 1.0]]
        >>> abs(log_jacobian) < 1e-12
        True

    """
    y = np.asarray(y, dtype=float)
    z = np.tanh(y)
    absolute = np.abs(y)
    # log(1 - tanh(y)**2), written to stay finite for large |y|
    log_jacobian = float(np.sum(
        2.0 * (math.log(2.0) - absolute - np.log1p(np.exp(-2.0 * absolute)))
    ))
    factor = np.zeros((p, p))
    factor[0, 0] = 1.0
    k = 0
    for i in range(1, p):
        remaining = 1.0
        for j in range(i):
            if remaining <= 0.0:
                return (None, -math.inf)
            factor[i, j] = z[k] * math.sqrt(remaining)
            log_jacobian += 0.5 * math.log(remaining)
            remaining -= factor[i, j] ** 2
            k += 1
        if remaining <= 0.0:
            return (None, -math.inf)
        factor[i, i] = math.sqrt(remaining)
    return (factor, log_jacobian)


def lkj_cholesky_log_density(factor, shape=1.0):
    """Log density of the LKJ(shape) distribution expressed on the
    Cholesky factor, up to a constant.

    """
    p = factor.shape[0]
    i = np.arange(1, p)
    log_diagonal = np.log(np.diag(factor)[1:])
    return float(np.sum((p - i - 1 + 2 * shape - 2) * log_diagonal))


def correlation_from_cholesky(factor):
    matrix = factor @ factor.T
    matrix = (matrix + matrix.T) / 2
    np.fill_diagonal(matrix, 1.0)
    return np.clip(matrix, -1.0, 1.0)


class _Target(object):
    """The log posterior density on the unconstrained scale."""

    def __init__(self, p, likelihood=None):
        self.p = p
        self.likelihood = likelihood
        (self.rows, self.columns) = np.triu_indices(p, k=1)

    def __call__(self, y):
        (factor, log_jacobian) = cholesky_from_unconstrained(y, self.p)
        if factor is None:
            return (-math.inf, None)
        matrix = correlation_from_cholesky(factor)
        value = lkj_cholesky_log_density(factor) + log_jacobian
        if self.likelihood is not None:
            value += float(self.likelihood.pair_terms(
                matrix[self.rows, self.columns]
            ).sum())
        if not math.isfinite(value):
            return (-math.inf, None)
        return (value, matrix)


def effective_sample_size(chain):
    """Estimate the effective sample size of a scalar chain with Geyer's
    initial positive sequence estimator.

    Example:

        >>> rng = np.random.default_rng(0)
        >>> ess = effective_sample_size(rng.standard_normal(4000))
        >>> 2500 < ess < 6000
        True

    """
    x = np.asarray(chain, dtype=float)
    n = x.size
    if n < 4:
        return float(n)
    x = x - x.mean()
    if not np.any(x):
        return float(n)
    size = 1 << int(math.ceil(math.log2(2 * n)))
    spectrum = np.fft.rfft(x, size)
    autocovariance = np.fft.irfft(spectrum * np.conj(spectrum), size)[:n]
    rho = autocovariance / autocovariance[0]
    total = 0.0
    for k in range(0, n - 1, 2):
        pair_sum = rho[k] + rho[k + 1]
        if pair_sum <= 0.0:
            break
        total += pair_sum
    tau = max(-1.0 + 2.0 * total, 1.0 / math.log10(max(n, 10)))
    return float(n / tau)


def bayes_mh(noisy, n_samples=DEFAULT_SAMPLES, burn_in=DEFAULT_BURN_IN,
             alpha=0.05, rng=None, use_likelihood=True, strict=True):
    """Sample the posterior of R with adaptive random-walk Metropolis.

    During burn-in a global log step size is tuned by Robbins-Monro
    towards an acceptance rate of 0.234 and per-coordinate scales follow
    the running standard deviations of the chain. Both are frozen when
    burn-in ends, so the kept draws come from a fixed Metropolis kernel.

    :param noisy: a geometric-mechanism
        :class:`~privcorr.core.mechanisms.NoisyCountSet`.
    :param int n_samples: draws kept after burn-in.
    :param int burn_in: adaptation iterations discarded.
    :param float alpha: intervals are at alpha / 2 and 1 - alpha / 2.
    :param rng: a :class:`numpy.random.Generator`.
    :param bool use_likelihood: False samples the LKJ(1) prior alone.
    :param bool strict: raise on a bad acceptance rate instead of flagging
        the run in the diagnostics.
    :return: (summary, draws).
    :raises SamplerDiagnosticError: on a bad acceptance rate when strict.

    """
    _check_geometric(noisy)
    alpha = check_alpha(alpha)
    if n_samples < 1 or burn_in < 0:
        msg = 'Need n_samples >= 1 and burn_in >= 0 (got {s}, {b})'
        raise EstimationError(msg.format(s=n_samples, b=burn_in))
    if rng is None:
        rng = np.random.default_rng()
    p = noisy.p
    dimension = unconstrained_size(p)
    target = _Target(p, CompositeLikelihood(noisy) if use_likelihood else None)

    y = np.zeros(dimension)
    (log_density, matrix) = target(y)
    log_scale = math.log(2.38 / math.sqrt(dimension))
    scales = np.ones(dimension)
    running_mean = np.zeros(dimension)
    running_m2 = np.zeros(dimension)

    draws = np.empty((n_samples, p, p))
    trace = np.empty((n_samples, dimension))
    accepted = 0
    for iteration in range(burn_in + n_samples):
        step = math.exp(log_scale) * scales * rng.standard_normal(dimension)
        proposal = y + step
        (proposal_density, proposal_matrix) = target(proposal)
        log_ratio = proposal_density - log_density
        log_uniform = math.log(rng.random())
        is_accepted = math.isfinite(proposal_density) and \
            log_uniform < log_ratio
        if is_accepted:
            (y, log_density, matrix) = \
                (proposal, proposal_density, proposal_matrix)

        if iteration < burn_in:
            probability = math.exp(min(0.0, log_ratio)) \
                if math.isfinite(proposal_density) else 0.0
            gain = (iteration + 1) ** -_GAIN_DECAY
            log_scale += gain * (probability - TARGET_ACCEPTANCE)
            count = iteration + 1
            delta = y - running_mean
            running_mean += delta / count
            running_m2 += delta * (y - running_mean)
            if count >= _SCALE_WARMUP:
                scales = np.sqrt(running_m2 / (count - 1) + 1e-8)
        else:
            kept = iteration - burn_in
            draws[kept] = matrix
            trace[kept] = y
            accepted += int(is_accepted)

    acceptance_rate = accepted / n_samples
    posterior = PosteriorDraws(draws, burn_in)
    ess = [
        effective_sample_size(values) for values in posterior.pair_draws().T
    ]
    diagnostics = {
        'method': 'mh',
        'acceptance_rate': acceptance_rate,
        'ess': ess,
        'step_scale': math.exp(log_scale),
        'flagged': False,
    }
    (low, high) = ACCEPTANCE_BOUNDS
    if not low <= acceptance_rate <= high:
        msg = 'Metropolis acceptance rate {rate:.3f} outside [{low}, {high}]'
        msg = msg.format(rate=acceptance_rate, low=low, high=high)
        if strict:
            raise SamplerDiagnosticError(msg)
        log.warning(msg)
        diagnostics['flagged'] = True
    posterior.diagnostics.update(diagnostics)
    msg = 'Metropolis run: acceptance {rate:.3f}, minimum ESS {ess:.1f}'
    log.info(msg.format(rate=acceptance_rate, ess=min(ess)))
    return (posterior.summary(alpha), posterior)


def posterior_mean_matrix(draws):
    """Return the posterior mean correlation matrix, projecting it onto
    the nearest correlation matrix if averaging left it non-PSD.

    """
    mean = draws.mean_matrix()
    if is_psd(mean):
        return CorrelationMatrix(mean)
    log.warning('Posterior mean matrix is not PSD; projecting it')
    return nearest_correlation(mean).matrix


def estimate_bayes(noisy, sampler='auto', n_samples=DEFAULT_SAMPLES,
                   burn_in=DEFAULT_BURN_IN, grid_size=DEFAULT_GRID_SIZE,
                   alpha=0.05, rng=None, strict=True):
    """Run the noise-aware Bayesian estimator on a geometric-mechanism
    noisy count set.

    With sampler 'auto', p = 2 uses the exact grid and larger p uses
    Metropolis.

    :rtype: :class:`BayesResult`

    """
    _check_geometric(noisy)
    if sampler not in SAMPLERS:
        msg = 'Unknown sampler {sampler!r} (expected one of {names})'
        raise EstimationError(msg.format(
            sampler=sampler, names=', '.join(SAMPLERS)
        ))
    if sampler == 'grid' and noisy.p != 2:
        msg = 'The grid sampler needs p = 2 (got p={p})'
        raise EstimationError(msg.format(p=noisy.p))
    if sampler == 'grid' or (sampler == 'auto' and noisy.p == 2):
        (summary, draws) = bayes_grid_p2(
            noisy.noisy[(0, 1)], noisy.half_n, noisy.epsilon_pair,
            grid_size, alpha, n_samples, rng, noisy.budget.delta_sensitivity
        )
        matrix = CorrelationMatrix(assemble(2, summary.mean))
        return BayesResult(matrix, summary, draws)
    (summary, draws) = bayes_mh(
        noisy, n_samples, burn_in, alpha, rng, strict=strict
    )
    return BayesResult(posterior_mean_matrix(draws), summary, draws)
