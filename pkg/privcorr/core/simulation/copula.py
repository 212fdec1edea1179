# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Gaussian-copula datasets and random truth correlation matrices. """

# Standard library imports
import collections
import logging

# Third party imports
import numpy as np
from scipy import stats

# Local (privcorr) imports
from privcorr.core.errors import ValidationError
from privcorr.core.estimation.correlation import CorrelationMatrix
from privcorr.core.quadrant_stats import Dataset

log = logging.getLogger(__name__)

# Eigenvalues below this fraction of the largest are treated as zero.
EIGEN_FLOOR = 1e-12
# Smallest eigenvalue tolerated before a matrix is rejected outright.
NEGATIVE_EIGEN_TOLERANCE = 1e-8
# Normal CDF values are kept away from 0 and 1 so every ppf is finite.
UNIFORM_CLIP = 1e-16


class CopulaError(ValidationError):
    """Raised when a correlation matrix cannot be factorised or does not
    conform to the marginals.

    """
    pass


LatentFactor = collections.namedtuple('LatentFactor', ['factor', 'method'])


def random_correlation(p, rng=None):
    """Draw W from a Wishart distribution with p + 1 degrees of freedom and
    identity scale, and return it scaled to unit diagonal.

    For p = 2 the off-diagonal of the result is uniform on (-1, 1).

    :param int p: the dimension, at least 2.
    :param rng: a :class:`numpy.random.Generator`.
    :rtype: :class:`~privcorr.core.estimation.CorrelationMatrix`

    Example:

        >>> R = random_correlation(4, np.random.default_rng(1))
        >>> np.allclose(np.diag(R.entries), 1.0)
        True

    """
    if int(p) != p or p < 2:
        msg = 'p must be an integer >= 2 (got {p})'
        raise ValidationError(msg.format(p=p))
    rng = np.random.default_rng() if rng is None else rng
    wishart = stats.wishart(df=p + 1, scale=np.eye(p))
    W = np.asarray(wishart.rvs(random_state=rng), dtype=float)
    scale = 1.0 / np.sqrt(np.diag(W))
    R = W * np.outer(scale, scale)
    R = (R + R.T) / 2
    np.fill_diagonal(R, 1.0)
    return CorrelationMatrix(np.clip(R, -1.0, 1.0))


def latent_factor(R):
    """Return a factor L with L L^T = R.

    The Cholesky factor is used when R is positive definite; a singular R
    (for example a correlation of exactly +/-1) falls back to an
    eigendecomposition with tiny eigenvalues floored at zero.

    :rtype: :class:`LatentFactor` (factor, method) where method is
        'cholesky' or 'eigen'.
    :raises CopulaError: if R has a clearly negative eigenvalue.

    Example:

        >>> latent_factor(np.eye(2)).method
        'cholesky'
        >>> latent_factor(np.ones((2, 2))).method
        'eigen'

    """
    R = np.asarray(R, dtype=float)
    try:
        return LatentFactor(np.linalg.cholesky(R), 'cholesky')
    except np.linalg.LinAlgError:
        pass
    (values, vectors) = np.linalg.eigh(R)
    if values.min() < -NEGATIVE_EIGEN_TOLERANCE:
        msg = 'Correlation matrix is not PSD (smallest eigenvalue {value})'
        raise CopulaError(msg.format(value=values.min()))
    values = np.where(values < EIGEN_FLOOR * values.max(), 0.0, values)
    log.debug('Cholesky failed; using eigenvalue-floored factor')
    return LatentFactor(vectors * np.sqrt(values), 'eigen')


def sample_copula(R, marginals, n, rng=None, factor=None):
    """Draw n records from the Gaussian copula with correlation R.

    Z ~ N_p(0, R) is mapped coordinate-wise through the standard normal
    CDF and then the quantile function of each marginal.

    :param R: a p x p correlation matrix.
    :param marginals: p :class:`~privcorr.core.simulation.MarginalSpec`.
    :param int n: the number of records.
    :param rng: a :class:`numpy.random.Generator`.
    :param factor: an optional precomputed :class:`LatentFactor` for R.
    :rtype: :class:`~privcorr.core.quadrant_stats.Dataset`
    :raises CopulaError: if R and the marginals disagree on p, or R cannot
        be factorised.

    Example:

        >>> from privcorr.core.simulation.marginals import parse_marginals
        >>> data = sample_copula(
        ...     np.eye(2), parse_marginals('normal(0, 1); exp(1)'), 5,
        ...     np.random.default_rng(0)
        ... )
        >>> data.n, data.p
        (5, 2)

    """
    R = np.asarray(R, dtype=float)
    p = R.shape[0]
    if len(marginals) != p:
        msg = 'Got {count} marginals for a {p} x {p} correlation matrix'
        raise CopulaError(msg.format(count=len(marginals), p=p))
    if int(n) != n or n < 2:
        msg = 'n must be an integer >= 2 (got {n})'
        raise ValidationError(msg.format(n=n))
    rng = np.random.default_rng() if rng is None else rng
    if factor is None:
        factor = latent_factor(R)
    Z = rng.standard_normal((int(n), p)) @ factor.factor.T
    U = np.clip(stats.norm.cdf(Z), UNIFORM_CLIP, 1.0 - UNIFORM_CLIP)
    columns = [marginal.ppf(U[:, j]) for (j, marginal) in enumerate(marginals)]
    return Dataset(
        np.column_stack(columns),
        columns=[str(marginal) for marginal in marginals]
    )
