# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Accuracy metrics over simulation replicates.

A replicate contributes p(p - 1)/2 pair observations (truth, estimate and,
for Bayesian estimators, an interval). Headline numbers are means of
replicate-level values and come with the standard error of that mean;
binned breakdowns pool pair observations by their true correlation.

"""

# Standard library imports
import logging
import math

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.errors import ValidationError
from privcorr.core.estimation.correlation import off_diagonal

log = logging.getLogger(__name__)

BIN_TOLERANCE = 1e-9


class MetricsError(ValidationError):
    """Base class for metric computation errors."""
    pass


class EmptyRecordsError(MetricsError):
    """Raised when a metric is requested over zero records."""
    pass


class MissingIntervalsError(MetricsError):
    """Raised when coverage is requested for records without intervals."""
    pass


class IntervalLevelError(MetricsError):
    """Raised when intervals were built at a level other than the one
    being summarized.

    """
    pass


class BinWidthError(MetricsError):
    """Raised when a bin width does not split [-1, 1] into whole bins."""
    pass


class RunRecord(object):
    """The outcome of one simulation replicate.

    :param int replicate: the replicate index.
    :param truth: the p x p truth correlation matrix.
    :param estimate: the p x p estimated correlation matrix.
    :param lower: per-pair interval lower bounds, or None.
    :param upper: per-pair interval upper bounds, or None.
    :param float runtime: wall-clock seconds spent in the replicate.
    :param int seed: the seed that reproduces the replicate.
    :param float alpha: the intervals hold 1 - alpha posterior mass; None
        when unrecorded.

    """

    def __init__(self, replicate, truth, estimate, lower=None, upper=None,
                 runtime=0.0, seed=None, alpha=None):
        truth = np.asarray(truth, dtype=float)
        estimate = np.asarray(estimate, dtype=float)
        if truth.shape != estimate.shape or truth.ndim != 2:
            msg = 'Truth {truth} and estimate {estimate} shapes differ'
            raise MetricsError(msg.format(
                truth=truth.shape, estimate=estimate.shape
            ))
        if (lower is None) != (upper is None):
            raise MetricsError('Intervals need both lower and upper bounds')
        self.replicate = int(replicate)
        self.truth = truth
        self.estimate = estimate
        pair_count = truth.shape[0] * (truth.shape[0] - 1) // 2
        if lower is not None:
            lower = np.asarray(lower, dtype=float)
            upper = np.asarray(upper, dtype=float)
            if lower.shape != (pair_count,) or upper.shape != (pair_count,):
                msg = 'Expected {count} interval bounds per side'
                raise MetricsError(msg.format(count=pair_count))
        self.lower = lower
        self.upper = upper
        self.runtime = float(runtime)
        self.seed = seed
        self.alpha = None if alpha is None else float(alpha)

    @property
    def p(self):
        return self.truth.shape[0]

    @property
    def has_intervals(self):
        return self.lower is not None

    def truth_pairs(self):
        return off_diagonal(self.truth)

    def estimate_pairs(self):
        return off_diagonal(self.estimate)

    def absolute_errors(self):
        return np.abs(self.estimate_pairs() - self.truth_pairs())

    def covered(self):
        truth = self.truth_pairs()
        return (self.lower <= truth) & (truth <= self.upper)

    def lengths(self):
        return self.upper - self.lower

    def __repr__(self):
        return '<RunRecord replicate={replicate} p={p}>'.format(
            replicate=self.replicate, p=self.p
        )


def _check_records(records):
    records = list(records)
    if not records:
        raise EmptyRecordsError('No records to summarize')
    return records


def _check_intervals(records):
    missing = [record.replicate for record in records
               if not record.has_intervals]
    if missing:
        msg = 'Records {replicates} carry no intervals'
        raise MissingIntervalsError(msg.format(replicates=missing[:5]))


def _standard_error(values):
    """Standard error of the mean; None for a single value."""
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        return None
    return float(values.std(ddof=1) / math.sqrt(values.size))


def mae(records):
    """Mean over replicates of the element-wise mean absolute error.

    Example:

        >>> record = RunRecord(0, [[1, 0.3], [0.3, 1]], [[1, 0.5], [0.5, 1]])
        >>> round(mae([record]), 12)
        0.2

    """
    records = _check_records(records)
    return float(np.mean([record.absolute_errors().mean()
                          for record in records]))


def check_level(alpha):
    if not 0.0 < alpha < 1.0:
        msg = 'alpha must lie in (0, 1) (got {alpha})'
        raise IntervalLevelError(msg.format(alpha=alpha))
    return float(alpha)


def coverage_and_length(records, alpha=0.05):
    """Return (coverage, mean_length): the fraction of (replicate, pair)
    events whose (1 - alpha) interval holds the truth, and the mean
    interval length.

    :raises MissingIntervalsError: if a record has no intervals.
    :raises IntervalLevelError: if a record states a different alpha.

    Example:

        >>> record = RunRecord(0, [[1, 0.3], [0.3, 1]], [[1, 0.2], [0.2, 1]],
        ...                    [0.1], [0.5], alpha=0.1)
        >>> coverage_and_length([record], alpha=0.1)
        (1.0, 0.4)

    """
    alpha = check_level(alpha)
    records = _check_records(records)
    _check_intervals(records)
    mismatched = [record.replicate for record in records
                  if record.alpha is not None
                  and abs(record.alpha - alpha) > 1e-12]
    if mismatched:
        msg = 'Records {replicates} hold intervals at a level other than ' \
            'alpha={alpha}'
        raise IntervalLevelError(msg.format(
            replicates=mismatched[:5], alpha=alpha
        ))
    covered = np.concatenate([record.covered() for record in records])
    lengths = np.concatenate([record.lengths() for record in records])
    return (float(covered.mean()), float(lengths.mean()))


def bin_edges(bin_width):
    """Return the edges of the bins of width `bin_width` on [-1, 1].

    Example:

        >>> bin_edges(0.4).tolist()
        [-1.0, -0.6, -0.2, 0.2, 0.6, 1.0]

    """
    if not bin_width > 0:
        msg = 'Bin width must be positive (got {width})'
        raise BinWidthError(msg.format(width=bin_width))
    count = int(round(2.0 / bin_width))
    if count < 1 or abs(count * bin_width - 2.0) > BIN_TOLERANCE:
        msg = 'Bin width {width} does not divide [-1, 1] evenly'
        raise BinWidthError(msg.format(width=bin_width))
    # Adding 0.0 turns a rounded -0.0 into 0.0.
    return np.linspace(-1.0, 1.0, count + 1).round(12) + 0.0


def bin_index(truth, edges):
    """Return the bin of each truth value; bins are closed on the left,
    and the last also on the right.

    Example:

        >>> int(bin_index(0.95, bin_edges(0.4)))
        4

    """
    index = np.searchsorted(edges, truth, side='right') - 1
    return np.clip(index, 0, len(edges) - 2)


def binned_metrics(records, bin_width):
    """Group pair observations by the bin of their true correlation.

    :return: one dict per bin with keys lower, upper, count, mae,
        mae_se and, when the records carry intervals, coverage,
        coverage_se and mean_length. Metrics of empty bins are None.

    """
    records = _check_records(records)
    edges = bin_edges(bin_width)
    truth = np.concatenate([record.truth_pairs() for record in records])
    errors = np.concatenate([record.absolute_errors() for record in records])
    with_intervals = all(record.has_intervals for record in records)
    if with_intervals:
        covered = np.concatenate([record.covered() for record in records])
        lengths = np.concatenate([record.lengths() for record in records])
    index = bin_index(truth, edges)

    bins = []
    for k in range(len(edges) - 1):
        members = index == k
        count = int(members.sum())
        entry = {
            'lower': float(edges[k]),
            'upper': float(edges[k + 1]),
            'count': count,
            'mae': float(errors[members].mean()) if count else None,
            'mae_se': _standard_error(errors[members]),
        }
        if with_intervals:
            entry['coverage'] = \
                float(covered[members].mean()) if count else None
            entry['coverage_se'] = _standard_error(covered[members])
            entry['mean_length'] = \
                float(lengths[members].mean()) if count else None
        bins.append(entry)
    return bins


class MetricsReport(object):
    """Headline metrics with Monte Carlo standard errors and a binned
    breakdown.

    Coverage fields and alpha are None when the estimator produced no
    intervals.

    """

    def __init__(self, replicates, pair_observations, mae, mae_se,
                 coverage=None, coverage_se=None, mean_length=None,
                 mean_length_se=None, binned=None, bin_width=None,
                 alpha=None):
        if coverage is not None and not 0.0 <= coverage <= 1.0:
            msg = 'Coverage {coverage} outside [0, 1]'
            raise MetricsError(msg.format(coverage=coverage))
        self.replicates = replicates
        self.pair_observations = pair_observations
        self.mae = mae
        self.mae_se = mae_se
        self.coverage = coverage
        self.coverage_se = coverage_se
        self.mean_length = mean_length
        self.mean_length_se = mean_length_se
        self.binned = binned or []
        self.bin_width = bin_width
        self.alpha = alpha

    @classmethod
    def from_records(cls, records, bin_width=0.4, alpha=0.05):
        """Summarize `records`; aggregation does not depend on their
        order. Coverage is reported for (1 - `alpha`) intervals.

        """
        records = sorted(_check_records(records),
                         key=lambda record: record.replicate)
        per_replicate_mae = [record.absolute_errors().mean()
                             for record in records]
        fields = {
            'replicates': len(records),
            'pair_observations': sum(record.truth_pairs().size
                                     for record in records),
            'mae': mae(records),
            'mae_se': _standard_error(per_replicate_mae),
            'binned': binned_metrics(records, bin_width),
            'bin_width': float(bin_width),
        }
        if all(record.has_intervals for record in records):
            (coverage, mean_length) = coverage_and_length(records, alpha)
            fields.update({
                'alpha': float(alpha),
                'coverage': coverage,
                'coverage_se': _standard_error(
                    [record.covered().mean() for record in records]
                ),
                'mean_length': mean_length,
                'mean_length_se': _standard_error(
                    [record.lengths().mean() for record in records]
                ),
            })
        return cls(**fields)

    def to_dict(self):
        return {
            'replicates': self.replicates,
            'pair_observations': self.pair_observations,
            'mae': self.mae,
            'mae_se': self.mae_se,
            'coverage': self.coverage,
            'coverage_se': self.coverage_se,
            'mean_length': self.mean_length,
            'mean_length_se': self.mean_length_se,
            'bin_width': self.bin_width,
            'alpha': self.alpha,
            'binned': self.binned,
        }

    def __repr__(self):
        return '<MetricsReport replicates={count} mae={mae:.4f}>'.format(
            count=self.replicates, mae=self.mae
        )
