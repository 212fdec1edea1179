# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Differentially private release of quadrant counts.

Four mechanisms are registered in :data:`MECHANISMS`:

geometric
    Unbounded two-sided geometric noise. The noise-aware Bayesian
    estimator models it exactly and is its default consumer.
tgm
    Geometric noise clamped to [0, half_n]. Simple, but piles mass onto
    the bounds when epsilon is small.
btgm
    Posterior mean of the count under a uniform prior on [0, half_n].
    The most concentrated of the three bounded mechanisms and the default
    for the maximum likelihood estimator.
rgm
    Geometric noise restricted to [0, half_n] and renormalized, with a
    recalibrated budget. No boundary spikes, but a larger variance for
    moderate epsilon.

When epsilon is large enough that the geometric mechanism rarely leaves
[0, half_n] the three bounded mechanisms behave almost identically.

"""

# Standard library imports
import logging
import math

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.quadrant_stats import half_count, pair_indices
from privcorr.core.mechanisms.budget import PrivacyBudget, check_epsilon
from privcorr.core.mechanisms.errors import (
    BoundsError, BudgetError, EpsilonSolveError, MechanismError,
    UnboundedSupportError, UnknownMechanismError
)
from privcorr.core.mechanisms.geometric import (
    geometric_alpha, geometric_log_pmf, geometric_noise
)
from privcorr.core.mechanisms.renormalized import (
    log_g, rgm, rgm_log_pmf, solve_epsilon_prime
)
from privcorr.core.mechanisms.truncated import (
    BoundedCountQuery, btgm, btgm_posterior_mean, tgm
)
from privcorr.core.mechanisms.verification import (
    OutputDistribution, output_distribution, verify_dp_ratio
)

log = logging.getLogger(__name__)

__all__ = [
    "BoundedCountQuery", "BoundsError", "BudgetError", "EpsilonSolveError",
    "MECHANISMS", "MechanismError", "NoisyCountSet", "OutputDistribution",
    "PrivacyBudget", "RANGE_PRESERVING", "UnboundedSupportError",
    "UnknownMechanismError", "btgm", "btgm_posterior_mean", "check_epsilon",
    "check_mechanism", "geometric_alpha", "geometric_log_pmf",
    "geometric_noise", "log_g", "output_distribution", "privatize_counts",
    "rgm", "rgm_log_pmf", "solve_epsilon_prime", "tgm", "verify_dp_ratio",
]


def _geometric(query, epsilon, delta, rng):
    return geometric_noise(query.count, epsilon, delta, rng)


MECHANISMS = {
    'geometric': _geometric,
    'tgm': tgm,
    'btgm': btgm,
    'rgm': rgm,
}

RANGE_PRESERVING = frozenset(['tgm', 'btgm', 'rgm'])
INTEGER_VALUED = frozenset(['geometric', 'tgm', 'rgm'])


def check_mechanism(name):
    """Return `name` if it names a registered mechanism.

    Example:

        >>> check_mechanism('btgm')
        'btgm'

    """
    if name not in MECHANISMS:
        msg = 'Unknown mechanism {name!r} (expected one of {names})'
        raise UnknownMechanismError(msg.format(
            name=name, names=', '.join(sorted(MECHANISMS))
        ))
    return name


class NoisyCountSet(object):
    """Privatized quadrant counts together with everything public about
    how they were produced.

    :param dict noisy: maps each pair (j, jp), j < jp, to its noisy count.
    :param string mechanism: the mechanism name.
    :param budget: the :class:`PrivacyBudget` that was spent.
    :param int n: the number of records.
    :param bounds: (L, U) for range-preserving mechanisms, else None.
    :raises MechanismError: if a value breaks the mechanism's range or
        integrality guarantees.

    """

    def __init__(self, noisy, mechanism, budget, n, bounds=None):
        self.mechanism = check_mechanism(mechanism)
        self.budget = budget
        self.n = int(n)
        self.p = budget.p
        self.half_n = half_count(n)
        expected = pair_indices(self.p)
        if sorted(noisy) != expected:
            msg = 'Expected noisy counts for {count} pairs, got {keys}'
            raise MechanismError(msg.format(
                count=len(expected), keys=sorted(noisy)
            ))
        if mechanism in RANGE_PRESERVING:
            if bounds is None:
                bounds = (0, self.half_n)
            bounds = (int(bounds[0]), int(bounds[1]))
        else:
            bounds = None
        self.bounds = bounds
        values = {}
        for pair in expected:
            try:
                value = float(noisy[pair])
            except (TypeError, ValueError) as e:
                msg = 'Noisy count for pair {pair} is not a number'
                raise MechanismError(msg.format(pair=pair)) from e
            if not math.isfinite(value):
                msg = 'Noisy count for pair {pair} is not finite'
                raise MechanismError(msg.format(pair=pair))
            if value.is_integer():
                value = int(value)
            elif mechanism in INTEGER_VALUED:
                msg = '{mechanism} produced non-integer count {value}'
                raise MechanismError(msg.format(
                    mechanism=mechanism, value=value
                ))
            if bounds and not bounds[0] <= value <= bounds[1]:
                msg = 'Noisy count {value} for pair {pair} outside {bounds}'
                raise BoundsError(msg.format(
                    value=value, pair=pair, bounds=bounds
                ))
            values[pair] = value
        self.noisy = values

    @property
    def range_preserving(self):
        return self.mechanism in RANGE_PRESERVING

    @property
    def epsilon_pair(self):
        return self.budget.epsilon_pair

    def pairs(self):
        return list(self.noisy)

    def vector(self):
        """Return the noisy counts in pair order as a float array."""
        return np.array([self.noisy[pair] for pair in self.noisy], dtype=float)

    def to_dict(self):
        document = {
            'n': self.n,
            'p': self.p,
            'half_n': self.half_n,
            'counts': [
                {'j': j, 'jp': jp, 't': t}
                for ((j, jp), t) in self.noisy.items()
            ],
            'mechanism': self.mechanism,
            'bounds': list(self.bounds) if self.bounds else None,
        }
        document.update(self.budget.to_dict())
        return document

    @classmethod
    def from_dict(cls, document):
        try:
            budget = PrivacyBudget(
                document['epsilon_total'], document['p'],
                document.get('delta_sensitivity', 1)
            )
            noisy = {
                (int(entry['j']), int(entry['jp'])): entry['t']
                for entry in document['counts']
            }
            return cls(
                noisy, document['mechanism'], budget, document['n'],
                document.get('bounds')
            )
        except (KeyError, TypeError) as e:
            msg = 'Malformed noisy count document: {error!r}'
            raise MechanismError(msg.format(error=e)) from e

    def __eq__(self, other):
        if not isinstance(other, NoisyCountSet):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        msg = '<NoisyCountSet mechanism={mechanism} n={n} p={p} noisy={noisy}>'
        return msg.format(
            mechanism=self.mechanism, n=self.n, p=self.p, noisy=self.noisy
        )


def privatize_counts(counts, budget, mechanism='geometric', rng=None,
                     round_output=False):
    """Release every quadrant count with `mechanism` at the per-pair budget.

    Pairs are privatized in lexicographic order from the single stream
    `rng`, so a seeded generator gives reproducible releases.

    :param counts: a :class:`~privcorr.core.quadrant_stats.QuadrantCountSet`.
    :param budget: a :class:`PrivacyBudget` for the same p.
    :param string mechanism: one of :data:`MECHANISMS`.
    :param rng: a :class:`numpy.random.Generator`.
    :param bool round_output: round BTGM releases to integers.
    :rtype: :class:`NoisyCountSet`
    :raises BudgetError: if the budget was set up for a different p.

    """
    check_mechanism(mechanism)
    if budget.p != counts.p:
        msg = 'Budget is for p={budget_p} but counts have p={counts_p}'
        raise BudgetError(msg.format(budget_p=budget.p, counts_p=counts.p))
    if rng is None:
        rng = np.random.default_rng()
    bounds = (0, counts.half_n)
    release = MECHANISMS[mechanism]
    noisy = {}
    for (pair, count) in counts.counts.items():
        query = BoundedCountQuery(count, *bounds)
        if mechanism == 'btgm':
            noisy[pair] = release(
                query, budget.epsilon_pair, budget.delta_sensitivity, rng,
                round_output=round_output
            )
        else:
            noisy[pair] = release(
                query, budget.epsilon_pair, budget.delta_sensitivity, rng
            )
    msg = 'Privatized {count} pair(s) with {mechanism} at epsilon_pair={eps}'
    log.info(msg.format(
        count=len(noisy), mechanism=mechanism, eps=budget.epsilon_pair
    ))
    return NoisyCountSet(
        noisy, mechanism, budget, counts.n,
        bounds if mechanism in RANGE_PRESERVING else None
    )
