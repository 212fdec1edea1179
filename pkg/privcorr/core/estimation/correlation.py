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
import logging

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.errors import ValidationError
from privcorr.core.quadrant_stats import pair_indices

log = logging.getLogger(__name__)

# Smallest eigenvalue a correlation matrix may have.
PSD_TOLERANCE = 1e-8
SYMMETRY_TOLERANCE = 1e-10


class EstimationError(ValidationError):
    """Base class for estimation errors."""
    pass


class InvalidCorrelationMatrixError(EstimationError):
    """Raised when a matrix is not symmetric, unit-diagonal and positive
    semidefinite.

    """
    pass


def is_psd(matrix, tolerance=PSD_TOLERANCE):
    """Return True if the symmetric `matrix` has no eigenvalue below
    -`tolerance`.

    Example:

        >>> is_psd(np.eye(3))
        True
        >>> is_psd([[1, 0.9, 0.9], [0.9, 1, -0.9], [0.9, -0.9, 1]])
        False

    """
    matrix = np.asarray(matrix, dtype=float)
    return bool(np.linalg.eigvalsh(matrix).min() >= -tolerance)


def assemble(p, pair_values):
    """Build a symmetric unit-diagonal matrix from off-diagonal values
    given in pair order.

    Example:

        >>> assemble(3, [0.1, 0.2, 0.3]).tolist()
        [[1.0, 0.1, 0.2], [0.1, 1.0, 0.3], [0.2, 0.3, 1.0]]

    """
    matrix = np.eye(p)
    for ((j, jp), value) in zip(pair_indices(p), pair_values):
        matrix[j, jp] = matrix[jp, j] = value
    return matrix


def off_diagonal(matrix):
    """Return the entries above the diagonal in pair order."""
    matrix = np.asarray(matrix, dtype=float)
    (rows, columns) = np.triu_indices(matrix.shape[0], k=1)
    return matrix[rows, columns]


class CorrelationMatrix(object):
    """A validated p x p correlation matrix.

    :param entries: array-like p x p matrix.
    :param float tolerance: the most negative eigenvalue accepted.
    :raises InvalidCorrelationMatrixError: if `entries` is not square,
        symmetric, unit-diagonal, bounded by 1 and positive semidefinite.

    """

    def __init__(self, entries, tolerance=PSD_TOLERANCE):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            msg = 'Correlation matrix must be square (got {shape})'
            raise InvalidCorrelationMatrixError(msg.format(
                shape=entries.shape
            ))
        if not np.all(np.isfinite(entries)):
            raise InvalidCorrelationMatrixError(
                'Correlation matrix has non-finite entries'
            )
        if np.abs(entries - entries.T).max() > SYMMETRY_TOLERANCE:
            raise InvalidCorrelationMatrixError(
                'Correlation matrix is not symmetric'
            )
        if np.abs(np.diag(entries) - 1.0).max() > SYMMETRY_TOLERANCE:
            raise InvalidCorrelationMatrixError(
                'Correlation matrix must have a unit diagonal'
            )
        if np.abs(entries).max() > 1.0 + SYMMETRY_TOLERANCE:
            raise InvalidCorrelationMatrixError(
                'Correlations must lie in [-1, 1]'
            )
        minimum = float(np.linalg.eigvalsh(entries).min())
        if minimum < -tolerance:
            msg = 'Correlation matrix is not PSD (smallest eigenvalue {value})'
            raise InvalidCorrelationMatrixError(msg.format(value=minimum))
        entries = (entries + entries.T) / 2
        np.fill_diagonal(entries, 1.0)
        entries = np.clip(entries, -1.0, 1.0)
        entries.flags.writeable = False
        self.entries = entries

    @property
    def p(self):
        return self.entries.shape[0]

    def pair_values(self):
        return off_diagonal(self.entries)

    def to_list(self):
        return self.entries.tolist()

    def __getitem__(self, index):
        return self.entries[index]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __repr__(self):
        return '<CorrelationMatrix p={p}>'.format(p=self.p)


class IntervalSummary(object):
    """Pairwise posterior means and equal-tailed (1 - alpha) intervals.

    :param pairs: the (j, jp) pairs, in order.
    :param mean: posterior means, one per pair.
    :param lower: alpha / 2 quantiles.
    :param upper: 1 - alpha / 2 quantiles.
    :param float alpha: the significance level.

    """

    def __init__(self, pairs, mean, lower, upper, alpha):
        self.pairs = list(pairs)
        self.mean = np.asarray(mean, dtype=float)
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        self.alpha = float(alpha)
        if np.any(self.lower > self.upper):
            raise EstimationError('Interval lower bound exceeds upper bound')

    @property
    def lengths(self):
        return self.upper - self.lower

    def interval(self, pair):
        index = self.pairs.index(tuple(pair))
        return (float(self.lower[index]), float(self.upper[index]))

    def to_dict(self):
        return {
            'alpha': self.alpha,
            'intervals': [
                {
                    'j': j, 'jp': jp, 'mean': float(mean),
                    'lower': float(lower), 'upper': float(upper),
                }
                for ((j, jp), mean, lower, upper) in zip(
                    self.pairs, self.mean, self.lower, self.upper
                )
            ],
        }


def check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        msg = 'alpha must lie in (0, 1) (got {alpha})'
        raise EstimationError(msg.format(alpha=alpha))
    return float(alpha)


class PosteriorDraws(object):
    """A sequence of S sampled correlation matrices.

    :param draws: array of shape (S, p, p).
    :param int burn_in: iterations discarded before the first kept draw.
    :param dict diagnostics: sampler diagnostics (acceptance rate,
        effective sample sizes, ...).

    """

    def __init__(self, draws, burn_in=0, diagnostics=None):
        draws = np.asarray(draws, dtype=float)
        if draws.ndim != 3 or draws.shape[0] < 1 or \
                draws.shape[1] != draws.shape[2]:
            msg = 'Expected draws of shape (S, p, p) with S >= 1, got {shape}'
            raise EstimationError(msg.format(shape=draws.shape))
        self.draws = draws
        self.burn_in = int(burn_in)
        self.diagnostics = dict(diagnostics or {})

    def __len__(self):
        return self.draws.shape[0]

    @property
    def p(self):
        return self.draws.shape[1]

    def pair_draws(self):
        """Return an (S, K) array of the off-diagonal draws in pair order."""
        (rows, columns) = np.triu_indices(self.p, k=1)
        return self.draws[:, rows, columns]

    def mean_matrix(self):
        return self.draws.mean(axis=0)

    def summary(self, alpha=0.05):
        """Summarize the draws with type-7 empirical quantiles."""
        alpha = check_alpha(alpha)
        values = self.pair_draws()
        (lower, upper) = np.quantile(
            values, [alpha / 2, 1 - alpha / 2], axis=0
        )
        return IntervalSummary(
            pair_indices(self.p), values.mean(axis=0), lower, upper, alpha
        )

    def monte_carlo_standard_errors(self):
        """Return per-pair standard errors of the posterior means, using
        the effective sample sizes when the sampler recorded them.

        """
        values = self.pair_draws()
        ess = self.diagnostics.get('ess')
        if ess is None:
            ess = np.full(values.shape[1], float(len(self)))
        ess = np.maximum(np.asarray(ess, dtype=float), 1.0)
        return values.std(axis=0, ddof=1 if len(self) > 1 else 0) / \
            np.sqrt(ess)
