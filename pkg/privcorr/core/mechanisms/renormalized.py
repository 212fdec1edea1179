# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" The renormalized geometric mechanism (RGM).

RGM restricts the two-sided geometric law centred on the true count M to
{L, ..., U} and renormalizes it. Renormalizing changes the privacy loss,
so the noise is calibrated with a smaller budget epsilon' solving

    epsilon' + log g(epsilon') = epsilon

where g bounds the ratio of normalizing constants between neighbouring
counts:

    g = (1 + a - a**(d + 1) - a**(U - L + 1 - d)) / (1 - a**(U - L + 1))

with a = exp(-epsilon' / delta) and d = min(delta, ceil((U - L) / 2)).

"""

# Standard library imports
import functools
import logging
import math

# Third party imports
import numpy as np
from scipy import optimize
from scipy.special import logsumexp

# Local (privcorr) imports
from privcorr.core.mechanisms.budget import check_epsilon
from privcorr.core.mechanisms.errors import BoundsError, EpsilonSolveError

log = logging.getLogger(__name__)

EPSILON_XTOL = 1e-14
_RTOL = 4 * np.finfo(float).eps


def _one_minus_power(exponent, rate):
    # 1 - a**exponent with a = exp(-rate)
    return -math.expm1(-exponent * rate)


def log_g(epsilon_prime, lower, upper, delta=1):
    """Return log g(epsilon') for the bounds [lower, upper].

    Example:

        >>> log_g(0.5, 0, 0)
        0.0
        >>> log_g(0.5, 0, 10) > 0
        True

    """
    if lower > upper:
        msg = 'Lower bound {lower} exceeds upper bound {upper}'
        raise BoundsError(msg.format(lower=lower, upper=upper))
    rate = epsilon_prime / delta
    size = upper - lower + 1
    d = min(delta, math.ceil((upper - lower) / 2))
    numerator = (_one_minus_power(d + 1, rate)
                 + _one_minus_power(size - d, rate)
                 - _one_minus_power(1, rate))
    return math.log(numerator) - math.log(_one_minus_power(size, rate))


def solve_epsilon_prime(epsilon, lower, upper, delta=1):
    """Return the recalibrated budget epsilon' in (0, epsilon].

    epsilon' + log g(epsilon') is strictly increasing, tends to 0 as
    epsilon' -> 0 and is at least epsilon at epsilon' = epsilon, so the
    root is bracketed.

    :raises EpsilonSolveError: if the bracket does not hold numerically.

    Example:

        >>> solve_epsilon_prime(1.0, 0, 0)
        1.0
        >>> 0 < solve_epsilon_prime(1.0, 0, 10) < 1.0
        True

    """
    epsilon = check_epsilon(epsilon)
    delta = check_epsilon(delta, 'delta')

    def excess(epsilon_prime):
        return epsilon_prime + log_g(epsilon_prime, lower, upper, delta) - \
            epsilon

    at_epsilon = excess(epsilon)
    if at_epsilon <= 0.0:
        if at_epsilon < -1e-12:
            msg = 'No recalibrated budget in (0, {epsilon}] for [{L}, {U}]'
            raise EpsilonSolveError(msg.format(
                epsilon=epsilon, L=lower, U=upper
            ))
        return epsilon
    floor = epsilon * 1e-12
    if excess(floor) >= 0.0:
        msg = 'Recalibrated budget for [{L}, {U}] is below {floor}'
        raise EpsilonSolveError(msg.format(L=lower, U=upper, floor=floor))
    epsilon_prime = optimize.brentq(
        excess, floor, epsilon, xtol=EPSILON_XTOL, rtol=_RTOL
    )
    msg = "RGM on [{L}, {U}] with epsilon={epsilon} uses epsilon'={prime}"
    log.debug(msg.format(
        L=lower, U=upper, epsilon=epsilon, prime=epsilon_prime
    ))
    return epsilon_prime


_cached_epsilon_prime = functools.lru_cache(maxsize=256)(solve_epsilon_prime)


def rgm_log_pmf(count, lower, upper, epsilon_prime, delta=1):
    """Return (support, log-probabilities) of the RGM output for true count
    `count` once epsilon' is known.

    Example:

        >>> support, log_p = rgm_log_pmf(1, 0, 2, 1.0)
        >>> support.tolist()
        [0, 1, 2]
        >>> round(float(np.exp(log_p).sum()), 12)
        1.0

    """
    support = np.arange(lower, upper + 1)
    log_weights = -np.abs(support - count) * (epsilon_prime / delta)
    return (support, log_weights - logsumexp(log_weights))


def rgm(query, epsilon, delta=1, rng=None):
    """Release a count with the renormalized geometric mechanism.

    :param query: a :class:`BoundedCountQuery`.
    :rtype: int

    """
    if rng is None:
        rng = np.random.default_rng()
    epsilon_prime = _cached_epsilon_prime(
        float(epsilon), query.lower, query.upper, float(delta)
    )
    (support, log_p) = rgm_log_pmf(
        query.count, query.lower, query.upper, epsilon_prime, delta
    )
    probabilities = np.exp(log_p)
    probabilities /= probabilities.sum()
    return int(rng.choice(support, p=probabilities))
