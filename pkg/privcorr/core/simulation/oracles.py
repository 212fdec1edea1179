# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Exact rational oracles for small instances.

These enumerate supports with :class:`fractions.Fraction` arithmetic and
are used to check the log-space implementations elsewhere in the package.
Floating point inputs (correlations, alpha) are converted to the exact
rational value of the double, so only the final conversion back to float
rounds.

"""

# Standard library imports
import math
from fractions import Fraction

# Local (privcorr) imports
from privcorr.core.errors import ValidationError

MAX_HALF_N = 20
# Correlations are clamped the same way the log-space code clamps them.
R_CLAMP = 1e-9


class OracleSizeError(ValidationError):
    """Raised when an instance is too large to enumerate."""
    pass


def odds_ratio(r):
    """Return the exact rational of the quadrant odds ratio
    ((pi + 2 asin r) / (pi - 2 asin r)) ** 2, r clamped to +/-(1 - 1e-9).

    Example:

        >>> odds_ratio(0.0)
        Fraction(1, 1)

    """
    r = min(1.0 - R_CLAMP, max(-1.0 + R_CLAMP, float(r)))
    angle = 2 * math.asin(r)
    return Fraction((math.pi + angle) / (math.pi - angle)) ** 2


def brute_force_count_distribution(half_n, r):
    """Return the PMF of the quadrant count at correlation `r` as a tuple
    of Fractions indexed by t = 0..half_n.

    :raises OracleSizeError: if half_n exceeds 20.

    Example:

        >>> [str(p) for p in brute_force_count_distribution(2, 0.0)]
        ['1/6', '2/3', '1/6']

    """
    if int(half_n) != half_n or not 1 <= half_n <= MAX_HALF_N:
        msg = 'half_n must be an integer in [1, {limit}] (got {half_n})'
        raise OracleSizeError(msg.format(limit=MAX_HALF_N, half_n=half_n))
    half_n = int(half_n)
    omega = odds_ratio(r)
    weights = [math.comb(half_n, t) ** 2 * omega ** t
               for t in range(half_n + 1)]
    total = sum(weights)
    return tuple(weight / total for weight in weights)


def geometric_pmf(k, alpha):
    """Exact two-sided geometric mass (1 - a) / (1 + a) * a ** |k|."""
    alpha = Fraction(alpha)
    return (1 - alpha) / (1 + alpha) * alpha ** abs(int(k))


def brute_force_marginal_likelihood(half_n, r, t_noisy, alpha):
    """Return Pr(noisy count = t_noisy | r) as a Fraction, for geometric
    noise with parameter `alpha` = exp(-epsilon / delta).

    Example:

        >>> str(brute_force_marginal_likelihood(2, 0.0, 1, Fraction(1, 2)))
        '5/18'

    """
    table = brute_force_count_distribution(half_n, r)
    return sum(geometric_pmf(t_noisy - t, alpha) * probability
               for (t, probability) in enumerate(table))


def brute_force_btgm_posterior_mean(m, lower, upper, alpha):
    """Return E(M | m) for M uniform on {L..U} by summing the posterior
    directly.

    Example:

        >>> brute_force_btgm_posterior_mean(-5, 0, 2, Fraction(1, 2))
        Fraction(4, 7)

    """
    alpha = Fraction(alpha)
    weights = [(count, alpha ** abs(m - count))
               for count in range(lower, upper + 1)]
    total = sum(weight for (_, weight) in weights)
    return sum(count * weight for (count, weight) in weights) / total
