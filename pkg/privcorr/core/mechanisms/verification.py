# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Exact output distributions of the range-preserving mechanisms and an
exhaustive check of their privacy loss.

For a true count M in [L, U] every range-preserving mechanism has a finite
output support, so the worst-case log-ratio

    max log Pr(s | M) - log Pr(s | M'),  |M - M'| <= delta,

can be enumerated over all M, M' and outputs s. The unbounded geometric
mechanism is handled analytically.

"""

# Standard library imports
import collections
import logging
import math

# Third party imports
import numpy as np
from scipy.special import logsumexp

# Local (privcorr) imports
from privcorr.core.mechanisms.budget import check_epsilon
from privcorr.core.mechanisms.errors import (
    BoundsError, UnboundedSupportError, UnknownMechanismError
)
from privcorr.core.mechanisms.geometric import geometric_alpha
from privcorr.core.mechanisms.renormalized import (
    rgm_log_pmf, solve_epsilon_prime
)
from privcorr.core.mechanisms.truncated import btgm_posterior_mean

log = logging.getLogger(__name__)

# BTGM outputs reached from different raw draws are merged when they agree
# to this many decimals (e.g. the value for m = L equals the one for m < L).
BTGM_VALUE_DECIMALS = 9

OutputDistribution = collections.namedtuple(
    'OutputDistribution', ['values', 'log_probabilities']
)


def _check_bounds(count, lower, upper):
    if lower > upper:
        msg = 'Lower bound {lower} exceeds upper bound {upper}'
        raise BoundsError(msg.format(lower=lower, upper=upper))
    if not lower <= count <= upper:
        msg = 'Count {count} outside bounds [{lower}, {upper}]'
        raise BoundsError(msg.format(count=count, lower=lower, upper=upper))


def _raw_geometric_masses(count, lower, upper, epsilon, delta):
    # Log-probabilities of the raw draw landing at each of L..U, plus the
    # total log-mass of the draw falling below L and above U.
    rate = epsilon / delta
    log_norm = math.log(-math.expm1(-rate)) - math.log1p(math.exp(-rate))
    inside = np.arange(lower, upper + 1)
    log_inside = log_norm - np.abs(inside - count) * rate
    # sum_{k >= j} a**k = a**j / (1 - a)
    log_tail = log_norm - math.log(-math.expm1(-rate))
    log_below = log_tail - (count - lower + 1) * rate
    log_above = log_tail - (upper - count + 1) * rate
    return (inside, log_inside, log_below, log_above)


def _tgm_distribution(count, lower, upper, epsilon, delta):
    (inside, log_p, log_below, log_above) = _raw_geometric_masses(
        count, lower, upper, epsilon, delta
    )
    log_p = log_p.copy()
    log_p[0] = np.logaddexp(log_p[0], log_below)
    log_p[-1] = np.logaddexp(log_p[-1], log_above)
    return OutputDistribution(inside.astype(float), log_p)


def _btgm_distribution(count, lower, upper, epsilon, delta,
                       round_output=False):
    (inside, log_p, log_below, log_above) = _raw_geometric_masses(
        count, lower, upper, epsilon, delta
    )
    alpha = geometric_alpha(epsilon, delta)
    raw_values = [lower - 1] + inside.tolist() + [upper + 1]
    raw_log_p = [log_below] + log_p.tolist() + [log_above]
    grouped = collections.OrderedDict()
    for (m, log_mass) in zip(raw_values, raw_log_p):
        value = btgm_posterior_mean(m, lower, upper, alpha)
        value = min(upper, max(lower, value))
        if round_output:
            value = float(round(value))
        key = round(value, BTGM_VALUE_DECIMALS)
        grouped.setdefault(key, []).append(log_mass)
    values = np.array(list(grouped), dtype=float)
    log_probabilities = np.array([
        logsumexp(masses) for masses in grouped.values()
    ])
    return OutputDistribution(values, log_probabilities)


def _rgm_distribution(count, lower, upper, epsilon, delta):
    epsilon_prime = solve_epsilon_prime(epsilon, lower, upper, delta)
    (support, log_p) = rgm_log_pmf(count, lower, upper, epsilon_prime, delta)
    return OutputDistribution(support.astype(float), log_p)


_DISTRIBUTIONS = {
    'tgm': _tgm_distribution,
    'btgm': _btgm_distribution,
    'rgm': _rgm_distribution,
}


def output_distribution(mechanism, count, lower, upper, epsilon, delta=1,
                        round_output=False):
    """Return the exact output distribution of a range-preserving mechanism
    applied to the true count `count`.

    :param string mechanism: one of 'tgm', 'btgm' or 'rgm'.
    :param bool round_output: only meaningful for 'btgm'.
    :rtype: :class:`OutputDistribution`
    :raises UnboundedSupportError: for the geometric mechanism.

    Example:

        >>> dist = output_distribution('tgm', 1, 0, 2, math.log(2))
        >>> [round(float(p), 6) for p in np.exp(dist.log_probabilities)]
        [0.333333, 0.333333, 0.333333]

    """
    epsilon = check_epsilon(epsilon)
    delta = check_epsilon(delta, 'delta')
    _check_bounds(count, lower, upper)
    if mechanism == 'geometric':
        raise UnboundedSupportError(
            'The geometric mechanism has unbounded support'
        )
    try:
        build = _DISTRIBUTIONS[mechanism]
    except KeyError as e:
        msg = 'Unknown mechanism {name!r}'
        raise UnknownMechanismError(msg.format(name=mechanism)) from e
    if mechanism == 'btgm':
        return build(count, lower, upper, epsilon, delta, round_output)
    return build(count, lower, upper, epsilon, delta)


def _log_probability_table(mechanism, lower, upper, epsilon, delta,
                           round_output):
    distributions = [
        output_distribution(
            mechanism, count, lower, upper, epsilon, delta, round_output
        )
        for count in range(lower, upper + 1)
    ]
    values = sorted(set().union(*[
        np.round(d.values, BTGM_VALUE_DECIMALS).tolist()
        for d in distributions
    ]))
    index = {value: i for (i, value) in enumerate(values)}
    table = np.full((len(distributions), len(values)), -np.inf)
    for (row, dist) in enumerate(distributions):
        for (value, log_p) in zip(dist.values, dist.log_probabilities):
            table[row, index[round(float(value), BTGM_VALUE_DECIMALS)]] = log_p
    return table


def verify_dp_ratio(mechanism, lower, upper, delta, epsilon,
                    round_output=False):
    """Return the largest privacy loss log Pr(s | M) - log Pr(s | M') over
    integer counts M, M' in [lower, upper] with |M - M'| <= delta and all
    outputs s.

    The geometric mechanism is evaluated analytically as
    (epsilon / delta) * floor(delta).

    Example:

        >>> verify_dp_ratio('geometric', 0, 10, 1, 0.5)
        0.5
        >>> verify_dp_ratio('rgm', 0, 10, 1, 0.5) <= 0.5 + 1e-9
        True

    """
    epsilon = check_epsilon(epsilon)
    delta = check_epsilon(delta, 'delta')
    if lower > upper:
        msg = 'Lower bound {lower} exceeds upper bound {upper}'
        raise BoundsError(msg.format(lower=lower, upper=upper))
    if mechanism == 'geometric':
        return (epsilon / delta) * math.floor(delta)
    table = _log_probability_table(
        mechanism, lower, upper, epsilon, delta, round_output
    )
    worst = 0.0
    max_shift = min(int(math.floor(delta)), upper - lower)
    for shift in range(1, max_shift + 1):
        first = table[:-shift]
        second = table[shift:]
        for (numerator, denominator) in ((first, second), (second, first)):
            # Outputs impossible under both counts carry no privacy loss.
            possible = np.isfinite(numerator)
            if np.any(possible & ~np.isfinite(denominator)):
                return math.inf
            if np.any(possible):
                ratio = numerator[possible] - denominator[possible]
                worst = max(worst, float(ratio.max()))
    msg = 'Worst-case privacy loss of {mechanism} on [{L}, {U}]: {worst}'
    log.debug(msg.format(mechanism=mechanism, L=lower, U=upper, worst=worst))
    return worst
