# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" The two-sided geometric mechanism.

Noise k is drawn from Pr(k) = ((1 - a) / (1 + a)) * a**|k| on the
integers, with a = exp(-epsilon / delta). Sampling is exact: the
difference of two i.i.d. geometric variates with success probability 1 - a
has exactly this law.

"""

# Standard library imports
import math

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.mechanisms.budget import check_epsilon


def geometric_alpha(epsilon, delta=1):
    """Return a = exp(-epsilon / delta).

    Example:

        >>> geometric_alpha(math.log(2))
        0.5

    """
    epsilon = check_epsilon(epsilon)
    delta = check_epsilon(delta, 'delta')
    return math.exp(-epsilon / delta)


def geometric_log_pmf(k, epsilon, delta=1):
    """Return log Pr(noise = k) for the two-sided geometric distribution.

    `k` may be an integer or an integer array.

    Example:

        >>> round(float(np.exp(geometric_log_pmf(0, math.log(2)))), 12)
        0.333333333333

    """
    epsilon = check_epsilon(epsilon)
    delta = check_epsilon(delta, 'delta')
    rate = epsilon / delta
    # log((1 - a) / (1 + a)) without cancellation for small rates
    log_norm = math.log(-math.expm1(-rate)) - math.log1p(math.exp(-rate))
    return log_norm - np.abs(k) * rate


def geometric_noise(count, epsilon, delta=1, rng=None):
    """Add two-sided geometric noise to an integer count.

    :param int count: the true count.
    :param float epsilon: the privacy budget spent on this count.
    :param float delta: the l1 sensitivity of the count.
    :param rng: a :class:`numpy.random.Generator`.
    :return: the noisy count, which may fall outside any natural range.
    :rtype: int
    :raises BudgetError: if epsilon or delta is not positive.

    """
    alpha = geometric_alpha(epsilon, delta)
    if rng is None:
        rng = np.random.default_rng()
    success = 1.0 - alpha
    noise = int(rng.geometric(success)) - int(rng.geometric(success))
    return int(count) + noise
