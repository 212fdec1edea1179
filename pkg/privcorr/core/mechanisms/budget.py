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
import math

# Local (privcorr) imports
from privcorr.core.mechanisms.errors import BudgetError


def check_epsilon(epsilon, name='epsilon'):
    """Return `epsilon` as a float, raising :class:`BudgetError` unless it
    is finite and strictly positive.

    Example:

        >>> check_epsilon(1)
        1.0
        >>> check_epsilon(0)
        Traceback (most recent call last):
          ...
        privcorr.core.mechanisms.errors.BudgetError: epsilon must be \
a positive finite number (got 0)

    """
    try:
        value = float(epsilon)
    except (TypeError, ValueError) as e:
        msg = '{name} must be a number (got {value!r})'
        raise BudgetError(msg.format(name=name, value=epsilon)) from e
    if not (math.isfinite(value) and value > 0):
        msg = '{name} must be a positive finite number (got {value})'
        raise BudgetError(msg.format(name=name, value=epsilon))
    return value


class PrivacyBudget(object):
    """A total privacy budget split evenly across the p(p-1)/2 pairwise
    quadrant counts of p variables.

    Sequential composition makes the release of all pairwise counts
    epsilon_total-DP when each count is released with epsilon_pair.

    :param float epsilon_total: the overall budget.
    :param int p: the number of variables.
    :param float delta_sensitivity: l1 sensitivity of one count.

    Example:

        >>> budget = PrivacyBudget(1.0, 5)
        >>> budget.pair_count, round(budget.epsilon_pair, 12)
        (10, 0.1)

    """

    def __init__(self, epsilon_total, p, delta_sensitivity=1):
        self.epsilon_total = check_epsilon(epsilon_total, 'epsilon_total')
        self.delta_sensitivity = check_epsilon(
            delta_sensitivity, 'delta_sensitivity'
        )
        if int(p) != p or p < 2:
            msg = 'A budget needs p >= 2 variables (got {p})'
            raise BudgetError(msg.format(p=p))
        self.p = int(p)

    @property
    def pair_count(self):
        return self.p * (self.p - 1) // 2

    @property
    def epsilon_pair(self):
        return 2 * self.epsilon_total / (self.p * (self.p - 1))

    def to_dict(self):
        return {
            'epsilon_total': self.epsilon_total,
            'epsilon_pair': self.epsilon_pair,
            'delta_sensitivity': self.delta_sensitivity,
        }

    def __eq__(self, other):
        if not isinstance(other, PrivacyBudget):
            return NotImplemented
        return (self.epsilon_total, self.p, self.delta_sensitivity) == \
            (other.epsilon_total, other.p, other.delta_sensitivity)

    def __repr__(self):
        msg = '<PrivacyBudget epsilon_total={total} p={p} epsilon_pair={pair}>'
        return msg.format(
            total=self.epsilon_total, p=self.p, pair=self.epsilon_pair
        )
