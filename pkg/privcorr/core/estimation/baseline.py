# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Kendall's tau baseline.

Spends the whole budget on Laplace-noised pairwise Kendall's tau values
and maps them to copula correlations with r = sin(pi * tau / 2). Unlike the
quadrant-count estimators this consumes the raw data directly.

Substituting one record changes at most n - 1 of the n(n - 1)/2 pair
concordances, each by 2 / (n(n - 1)/2), so tau has sensitivity 4 / n. That
bound is for tau-a, whose denominator is always n(n - 1)/2; tau-b divides
by a data-dependent tie correction, so the baseline uses tau-a.

"""

# Standard library imports
import logging
import math

# Third party imports
import numpy as np
from scipy import stats

# Local (privcorr) imports
from privcorr.core.estimation.correlation import assemble
from privcorr.core.estimation.projection import nearest_correlation
from privcorr.core.mechanisms import PrivacyBudget
from privcorr.core.quadrant_stats import Dataset, pair_indices

log = logging.getLogger(__name__)


def kendall_sensitivity(n):
    """Return the l1 sensitivity of Kendall's tau on n records.

    Example:

        >>> kendall_sensitivity(100)
        0.04

    """
    return 4.0 / n


def _tied_pairs(values):
    counts = np.unique(values, return_counts=True)[1]
    return float((counts * (counts - 1) // 2).sum())


def kendall_tau_a(x, y):
    """Return Kendall's tau-a, (concordant - discordant) pairs over all
    n(n - 1)/2 pairs. Tied pairs count as neither.

    Example:

        >>> round(kendall_tau_a([1, 1, 2, 3], [1, 2, 3, 3]), 12)
        0.666666666667

    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    pairs = x.size * (x.size - 1) / 2.0
    untied_x = pairs - _tied_pairs(x)
    untied_y = pairs - _tied_pairs(y)
    if untied_x == 0 or untied_y == 0:
        # A constant column has no ranking information.
        return 0.0
    tau_b = stats.kendalltau(x, y, variant='b')[0]
    return float(tau_b * math.sqrt(untied_x * untied_y) / pairs)


def tau_to_correlation(tau):
    """Map Kendall's tau to a Gaussian copula correlation, clamping tau to
    [-1, 1] first.

    Example:

        >>> float(tau_to_correlation(0.0)), float(tau_to_correlation(1.5))
        (0.0, 1.0)

    """
    return np.sin(np.pi * np.clip(tau, -1.0, 1.0) / 2)


def li_kendall_baseline(data, epsilon_total, rng=None):
    """Estimate R from Laplace-noised Kendall's tau values.

    :param data: a :class:`~privcorr.core.quadrant_stats.Dataset`.
    :param float epsilon_total: the overall budget, split evenly over
        the p(p - 1)/2 pairs.
    :param rng: a :class:`numpy.random.Generator`.
    :rtype: :class:`~privcorr.core.estimation.projection.ProjectionResult`

    """
    if not isinstance(data, Dataset):
        data = Dataset(data)
    if rng is None:
        rng = np.random.default_rng()
    budget = PrivacyBudget(epsilon_total, data.p)
    scale = kendall_sensitivity(data.n) / budget.epsilon_pair
    noisy_tau = []
    for (j, jp) in pair_indices(data.p):
        tau = kendall_tau_a(data.values[:, j], data.values[:, jp])
        noisy_tau.append(tau + rng.laplace(0.0, scale))
    pairwise = tau_to_correlation(np.array(noisy_tau))
    msg = 'Kendall baseline: Laplace scale {scale:.4g} per pair'
    log.debug(msg.format(scale=scale))
    return nearest_correlation(assemble(data.p, pairwise))
