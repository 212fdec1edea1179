# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Marginal distributions for copula simulation.

A marginal is written as a call-style string, e.g. ``gamma(2, 1)`` or
``discrete(1, 2, 3 | 0.3, 0.3, 0.4)``. Parameters follow the usual
statistical conventions rather than scipy's:

    ============  ==========================  =========================
    family        parameters                  notes
    ============  ==========================  =========================
    normal        mean, standard deviation
    gamma         shape, rate                 scipy scale = 1 / rate
    exponential   rate                        alias ``exp``
    beta          a, b
    student_t     degrees of freedom          alias ``t``
    discrete      values | probabilities      probabilities sum to 1
    ============  ==========================  =========================

"""

# Standard library imports
import logging

# Third party imports
import numpy as np
from scipy import stats

# Local (privcorr) imports
from privcorr.core.errors import ValidationError
from privcorr.core.helpers import conversions

log = logging.getLogger(__name__)

PROBABILITY_TOLERANCE = 1e-9

_ALIASES = {
    'exp': 'exponential',
    't': 'student_t',
    'student-t': 'student_t',
    'gaussian': 'normal',
}

_ARITY = {
    'normal': 2,
    'gamma': 2,
    'exponential': 1,
    'beta': 2,
    'student_t': 1,
}


class MarginalSpecError(ValidationError):
    """Raised when a marginal string or its parameters are invalid."""
    pass


def _frozen(family, params):
    if family == 'normal':
        (mean, sd) = params
        return stats.norm(loc=mean, scale=sd)
    if family == 'gamma':
        (shape, rate) = params
        return stats.gamma(a=shape, scale=1.0 / rate)
    if family == 'exponential':
        (rate,) = params
        return stats.expon(scale=1.0 / rate)
    if family == 'beta':
        (a, b) = params
        return stats.beta(a, b)
    (df,) = params
    return stats.t(df)


class MarginalSpec(object):
    """One marginal distribution of a simulated Gaussian-copula dataset.

    :param string family: a family name (see the module docstring).
    :param params: the family parameters; for ``discrete``, a pair
        (values, probabilities).
    :raises MarginalSpecError: for an unknown family or parameters
        outside the family's domain.

    Example:

        >>> spec = MarginalSpec.parse('gamma(2, 1)')
        >>> spec.family, spec.params
        ('gamma', (2.0, 1.0))
        >>> str(spec)
        'gamma(2, 1)'

    """

    def __init__(self, family, params):
        family = _ALIASES.get(family.lower(), family.lower())
        self.family = family
        if family == 'discrete':
            (values, probabilities) = params
            self._init_discrete(values, probabilities)
            return
        if family not in _ARITY:
            msg = "Unknown marginal family '{family}'"
            raise MarginalSpecError(msg.format(family=family))
        params = tuple(float(value) for value in params)
        if len(params) != _ARITY[family]:
            msg = '{family} takes {arity} parameter(s), got {count}'
            raise MarginalSpecError(msg.format(
                family=family, arity=_ARITY[family], count=len(params)
            ))
        if not all(np.isfinite(params)):
            msg = '{family} parameters must be finite'
            raise MarginalSpecError(msg.format(family=family))
        positive = params[1:] if family == 'normal' else params
        if min(positive) <= 0:
            msg = 'Invalid {family} parameters {params}: scale, shape and \
rate parameters must be positive'
            raise MarginalSpecError(msg.format(family=family, params=params))
        self.params = params
        self._distribution = _frozen(family, params)

    def _init_discrete(self, values, probabilities):
        values = np.asarray(values, dtype=float)
        probabilities = np.asarray(probabilities, dtype=float)
        if values.size == 0 or values.shape != probabilities.shape:
            raise MarginalSpecError(
                'discrete needs as many probabilities as values'
            )
        if np.unique(values).size != values.size:
            raise MarginalSpecError('discrete values must be distinct')
        if np.any(probabilities < 0) or \
                abs(probabilities.sum() - 1.0) > PROBABILITY_TOLERANCE:
            msg = 'discrete probabilities must be non-negative and sum to 1 \
(sum {total})'
            raise MarginalSpecError(msg.format(total=probabilities.sum()))
        order = np.argsort(values)
        self.values = values[order]
        self.probabilities = probabilities[order]
        self.cumulative = np.cumsum(self.probabilities)
        self.cumulative[-1] = 1.0
        self.params = (tuple(self.values), tuple(self.probabilities))
        self._distribution = None

    @classmethod
    def parse(cls, in_str):
        """Build a :class:`MarginalSpec` from a string such as
        ``'beta(2, 5)'``.

        :raises MarginalSpecError: if the string cannot be parsed.

        """
        try:
            (name, groups) = conversions.function_call(in_str)
        except conversions.ConversionError as e:
            msg = "Cannot parse marginal '{in_str}'"
            raise MarginalSpecError(msg.format(in_str=in_str)) from e
        family = _ALIASES.get(name, name)
        if family == 'discrete':
            if len(groups) != 2:
                msg = "discrete marginal '{in_str}' needs 'values | \
probabilities'"
                raise MarginalSpecError(msg.format(in_str=in_str))
            return cls(family, groups)
        if len(groups) != 1:
            msg = "Only discrete marginals take a '|' ('{in_str}')"
            raise MarginalSpecError(msg.format(in_str=in_str))
        return cls(family, groups[0])

    @property
    def is_discrete(self):
        return self.family == 'discrete'

    def ppf(self, u):
        """The quantile function; for discrete marginals the generalized
        inverse inf{x : F(x) >= u}.

        Example:

            >>> spec = MarginalSpec.parse('discrete(1, 2, 3 | 0.3, 0.3, 0.4)')
            >>> spec.ppf([0.1, 0.3, 0.31, 0.6, 0.99]).tolist()
            [1.0, 1.0, 2.0, 2.0, 3.0]

        """
        u = np.asarray(u, dtype=float)
        if self.is_discrete:
            index = np.searchsorted(self.cumulative, u, side='left')
            return self.values[np.clip(index, 0, self.values.size - 1)]
        return self._distribution.ppf(u)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        if self.is_discrete:
            index = np.searchsorted(self.values, x, side='right')
            padded = np.concatenate(([0.0], self.cumulative))
            return padded[index]
        return self._distribution.cdf(x)

    def __eq__(self, other):
        return isinstance(other, MarginalSpec) and \
            self.family == other.family and self.params == other.params

    def __str__(self):
        def fmt(values):
            return ', '.join('{0:g}'.format(value) for value in values)
        if self.is_discrete:
            return 'discrete({values} | {probabilities})'.format(
                values=fmt(self.params[0]), probabilities=fmt(self.params[1])
            )
        return '{family}({params})'.format(
            family=self.family, params=fmt(self.params)
        )

    def __repr__(self):
        return '<MarginalSpec {spec}>'.format(spec=self)


def parse_marginals(in_str):
    """Parse a ';'-separated list of marginal strings.

    Example:

        >>> [str(m) for m in parse_marginals('normal(0, 1); exp(1)')]
        ['normal(0, 1)', 'exponential(1)']

    """
    return [MarginalSpec.parse(item)
            for item in conversions.semicolon_list(in_str)]
