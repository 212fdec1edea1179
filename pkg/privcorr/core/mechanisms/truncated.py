# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Range-preserving remaps of the geometric mechanism.

Both mechanisms here first draw m = M + noise with the two-sided geometric
mechanism and then post-process m using the public bounds [L, U]:

* the truncated geometric mechanism (TGM) clamps m into [L, U], which is
  the posterior mode of M under a uniform prior on [L, U];
* the Bayesian truncated geometric mechanism (BTGM) reports the posterior
  mean of M under the same prior. Its output need not be an integer.

Post-processing keeps the epsilon-DP guarantee of the geometric draw.

"""

# Standard library imports
import collections
import logging
import math

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.mechanisms.errors import BoundsError
from privcorr.core.mechanisms.geometric import (
    geometric_alpha, geometric_noise
)

log = logging.getLogger(__name__)

# Below this value of 1 - alpha the closed form loses too many digits to
# cancellation and the posterior mean is summed directly.
_CLOSED_FORM_MIN_GAP = 1e-3


_BoundedCountQuery = collections.namedtuple(
    'BoundedCountQuery', ['count', 'lower', 'upper']
)


class BoundedCountQuery(_BoundedCountQuery):
    """A true count M with public integer bounds L <= M <= U."""

    __slots__ = ()

    def __new__(cls, count, lower, upper):
        (count, lower, upper) = (int(count), int(lower), int(upper))
        if lower > upper:
            msg = 'Lower bound {lower} exceeds upper bound {upper}'
            raise BoundsError(msg.format(lower=lower, upper=upper))
        if not lower <= count <= upper:
            msg = 'Count {count} outside bounds [{lower}, {upper}]'
            raise BoundsError(msg.format(
                count=count, lower=lower, upper=upper
            ))
        return super().__new__(cls, count, lower, upper)


def clamp(value, lower, upper):
    return min(upper, max(lower, value))


def tgm(query, epsilon, delta=1, rng=None):
    """Release a count with the truncated geometric mechanism.

    :param query: a :class:`BoundedCountQuery`.
    :rtype: int

    """
    noisy = geometric_noise(query.count, epsilon, delta, rng)
    return clamp(noisy, query.lower, query.upper)


def _posterior_mean_direct(m, lower, upper, alpha):
    support = np.arange(lower, upper + 1, dtype=float)
    log_weights = np.abs(support - m) * math.log(alpha)
    weights = np.exp(log_weights - log_weights.max())
    return float(np.dot(support, weights) / weights.sum())


def btgm_posterior_mean(m, lower, upper, alpha):
    """Return E(M | m) when M is uniform on {L, ..., U} and m is M plus
    two-sided geometric noise with parameter `alpha`.

    Evaluated in closed form, with three branches according to whether m
    falls below, inside, or above [L, U].

    :param int m: the raw geometric mechanism output.
    :param int lower: L.
    :param int upper: U.
    :param float alpha: exp(-epsilon / delta), in [0, 1).
    :rtype: float

    Example:

        >>> round(btgm_posterior_mean(-5, 0, 2, 0.5), 12)
        0.571428571429
        >>> round(btgm_posterior_mean(5, 0, 10, 0.3), 12)
        5.0

    """
    if lower > upper:
        msg = 'Lower bound {lower} exceeds upper bound {upper}'
        raise BoundsError(msg.format(lower=lower, upper=upper))
    if lower == upper:
        return float(lower)
    if alpha == 0.0:
        return float(clamp(m, lower, upper))
    if 1.0 - alpha < _CLOSED_FORM_MIN_GAP:
        return _posterior_mean_direct(m, lower, upper, alpha)

    a = alpha
    size = upper - lower + 1
    if m < lower:
        numerator = a * (1 - size * a ** (size - 1) + (size - 1) * a ** size)
        return lower + numerator / ((1 - a) * (1 - a ** size))
    if m > upper:
        numerator = (upper - lower) - size * a + a ** size
        return lower + numerator / ((1 - a) * (1 - a ** size))
    below = m - lower
    above = upper - m
    numerator = (below * (1 - a * a) + a ** (below + 1)
                 - size * a ** (above + 1) + (size - 1) * a ** (above + 2))
    denominator = (1 - a) * (1 + a - a ** (below + 1) - a ** (above + 1))
    return lower + numerator / denominator


def btgm(query, epsilon, delta=1, rng=None, round_output=False):
    """Release a count with the Bayesian truncated geometric mechanism.

    :param query: a :class:`BoundedCountQuery`.
    :param bool round_output: round the posterior mean to the nearest
        integer before release.
    :return: a value in [L, U]; an int when `round_output` is set.

    """
    noisy = geometric_noise(query.count, epsilon, delta, rng)
    value = btgm_posterior_mean(
        noisy, query.lower, query.upper, geometric_alpha(epsilon, delta)
    )
    # Rounding error can push the closed form a hair past the bounds.
    value = clamp(value, query.lower, query.upper)
    if round_output:
        return int(round(value))
    return value
