# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Median-quadrant count statistics.

Raw data enters privcorr here and nowhere else on the private path. Each
variable is split at its sample median (ties broken by a pre-committed
random key per record) and, for every pair of variables, we count the
records lying above both medians. Substituting one record changes each
count by at most one.

"""

# Standard library imports
import collections
import itertools
import logging

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.errors import ValidationError

log = logging.getLogger(__name__)


class QuadrantStatsError(ValidationError):
    """Base class for quadrant statistic errors."""
    pass


class InvalidDatasetError(QuadrantStatsError):
    """Raised when a data matrix is not a finite n x p array with n >= 2
    and p >= 2.

    """
    pass


class ShapeMismatchError(QuadrantStatsError):
    """Raised when a tie-key matrix does not conform to its dataset."""
    pass


class CountRangeError(QuadrantStatsError):
    """Raised when a quadrant count set is incomplete or holds a count
    outside [0, half_n].

    """
    pass


Sensitivity = collections.namedtuple('Sensitivity', ['per_pair', 'total'])


def half_count(n):
    """Return the number of records placed above the median of a variable
    observed on `n` records.

    :param int n: the number of records.
    :rtype: int

    Example:

        >>> half_count(6), half_count(7)
        (3, 4)

    """
    return (int(n) + 1) // 2


def pair_indices(p):
    """Return the unordered variable pairs (j, jp), j < jp, in
    lexicographic order.

    Example:

        >>> pair_indices(3)
        [(0, 1), (0, 2), (1, 2)]

    """
    return list(itertools.combinations(range(int(p)), 2))


class Dataset(object):
    """An n x p matrix of finite real observations.

    :param values: anything :func:`numpy.asarray` accepts as a 2-d array.
    :param columns: optional column names, used only for reporting.
    :raises InvalidDatasetError: if the matrix is not 2-d, has fewer than
        two rows or columns, or holds a non-finite entry.

    """

    def __init__(self, values, columns=None):
        try:
            values = np.array(values, dtype=float)
        except (TypeError, ValueError) as e:
            raise InvalidDatasetError('Data must be numeric') from e
        if values.ndim != 2:
            msg = 'Expected a 2-d data matrix, got {ndim} dimension(s)'
            raise InvalidDatasetError(msg.format(ndim=values.ndim))
        (n, p) = values.shape
        if n < 2 or p < 2:
            msg = 'Expected at least 2 records and 2 variables, got {n}x{p}'
            raise InvalidDatasetError(msg.format(n=n, p=p))
        if not np.all(np.isfinite(values)):
            raise InvalidDatasetError('Data contains NaN or infinite values')
        if columns is None:
            columns = ['x{j}'.format(j=j) for j in range(p)]
        if len(columns) != p:
            msg = 'Expected {p} column names, got {count}'
            raise InvalidDatasetError(msg.format(p=p, count=len(columns)))
        values.flags.writeable = False
        self.values = values
        self.columns = list(columns)

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def p(self):
        return self.values.shape[1]

    @property
    def half_n(self):
        return half_count(self.n)

    def __repr__(self):
        return '<Dataset n={n} p={p}>'.format(n=self.n, p=self.p)


class TieKeyMatrix(object):
    """Data-independent random keys used to break ties between equal
    values in a column. A record with the larger key ranks higher.

    :param keys: n x p array of keys; keys within a column are distinct.
    :param int seed_provenance: the entropy the keys were derived from.
    :param int regenerations: how many column regenerations were needed to
        remove finite-precision collisions.

    """

    def __init__(self, keys, seed_provenance, regenerations=0):
        keys = np.array(keys, dtype=float)
        keys.flags.writeable = False
        self.keys = keys
        self.seed_provenance = seed_provenance
        self.regenerations = regenerations

    @property
    def shape(self):
        return self.keys.shape


def generate_tie_keys(n, p, seed=None):
    """Generate an n x p matrix of independent standard normal tie keys.

    The keys are a deterministic function of `seed` and must be created
    before the data are looked at. A column containing a duplicated key is
    redrawn from a sub-seed derived from (seed, column, attempt).

    :param int n: the number of records.
    :param int p: the number of variables.
    :param seed: an integer seed, or None for fresh OS entropy.
    :rtype: :class:`TieKeyMatrix`
    :raises ValidationError: if n or p is smaller than 1.

    Example:

        >>> a = generate_tie_keys(3, 2, seed=7)
        >>> b = generate_tie_keys(3, 2, seed=7)
        >>> bool((a.keys == b.keys).all())
        True

    """
    if n < 1 or p < 1:
        msg = 'Tie keys need n >= 1 and p >= 1 (got n={n}, p={p})'
        raise ValidationError(msg.format(n=n, p=p))
    seed_sequence = np.random.SeedSequence(seed)
    rng = np.random.default_rng(seed_sequence)
    keys = rng.standard_normal((n, p))
    regenerations = 0
    for j in range(p):
        attempt = 0
        while np.unique(keys[:, j]).size < n:
            attempt += 1
            regenerations += 1
            sub_rng = np.random.default_rng(
                [seed_sequence.entropy, j, attempt]
            )
            keys[:, j] = sub_rng.standard_normal(n)
    if regenerations:
        msg = 'Regenerated tie keys {count} time(s) after collisions'
        log.info(msg.format(count=regenerations))
    return TieKeyMatrix(keys, seed_sequence.entropy, regenerations)


def _check_conforms(data, keys):
    if not isinstance(data, Dataset):
        data = Dataset(data)
    key_values = keys.keys if isinstance(keys, TieKeyMatrix) else \
        np.asarray(keys, dtype=float)
    if key_values.shape != data.values.shape:
        msg = 'Tie keys have shape {key_shape}, data has shape {data_shape}'
        raise ShapeMismatchError(msg.format(
            key_shape=key_values.shape, data_shape=data.values.shape
        ))
    return (data, key_values)


def _indicators(values, key_values, half_n):
    # lexsort sorts by the last key first: value, then tie key.
    order = np.lexsort((key_values, values))
    indicators = np.zeros(values.shape[0], dtype=np.int64)
    indicators[order[values.shape[0] - half_n:]] = 1
    return indicators


def above_median_indicators(data, keys, j):
    """Return the 0/1 vector marking the half_n records of column `j` that
    rank highest under the (value, key) lexicographic order.

    :param data: a :class:`Dataset` (or array accepted by it).
    :param keys: a :class:`TieKeyMatrix` (or array) of the same shape.
    :param int j: the column index.
    :rtype: numpy.ndarray
    :raises ShapeMismatchError: if keys and data differ in shape.

    Example:

        >>> data = Dataset([[5, 1], [5, 2], [5, 3], [5, 4]])
        >>> keys = [[0.1, 0], [0.9, 0], [0.4, 0], [0.7, 0]]
        >>> above_median_indicators(data, keys, 0).tolist()
        [0, 1, 0, 1]

    """
    (data, key_values) = _check_conforms(data, keys)
    if not 0 <= j < data.p:
        msg = 'Column index {j} out of range for p={p}'
        raise ShapeMismatchError(msg.format(j=j, p=data.p))
    return _indicators(data.values[:, j], key_values[:, j], data.half_n)


class QuadrantCountSet(object):
    """The p(p-1)/2 quadrant counts of a dataset.

    :param dict counts: maps each pair (j, jp), j < jp, to its count.
    :param int n: the number of records.
    :param int p: the number of variables.
    :raises CountRangeError: if a pair is missing or a count is outside
        [0, half_n].

    """

    def __init__(self, counts, n, p):
        self.n = int(n)
        self.p = int(p)
        self.half_n = half_count(n)
        expected = pair_indices(p)
        if sorted(counts) != expected:
            msg = 'Expected counts for {count} pairs, got {keys}'
            raise CountRangeError(msg.format(
                count=len(expected), keys=sorted(counts)
            ))
        for (pair, t) in counts.items():
            if not 0 <= t <= self.half_n:
                msg = 'Count {t} for pair {pair} outside [0, {half_n}]'
                raise CountRangeError(msg.format(
                    t=t, pair=pair, half_n=self.half_n
                ))
        self.counts = {pair: int(counts[pair]) for pair in expected}

    def pairs(self):
        return list(self.counts)

    def to_dict(self):
        return {
            'n': self.n,
            'p': self.p,
            'half_n': self.half_n,
            'counts': [
                {'j': j, 'jp': jp, 't': t}
                for ((j, jp), t) in self.counts.items()
            ],
        }

    @classmethod
    def from_dict(cls, document):
        counts = {
            (int(entry['j']), int(entry['jp'])): int(entry['t'])
            for entry in document['counts']
        }
        return cls(counts, document['n'], document['p'])

    def __eq__(self, other):
        if not isinstance(other, QuadrantCountSet):
            return NotImplemented
        return (self.n, self.p, self.counts) == \
            (other.n, other.p, other.counts)

    def __repr__(self):
        return '<QuadrantCountSet n={n} p={p} counts={counts}>'.format(
            n=self.n, p=self.p, counts=self.counts
        )


def quadrant_counts(data, keys):
    """Compute t_jj' = sum_i a_ij * a_ij' for every pair j < j', where
    a_.j are the above-median indicators of column j.

    :param data: a :class:`Dataset` (or array accepted by it).
    :param keys: a :class:`TieKeyMatrix` (or array) of the same shape.
    :rtype: :class:`QuadrantCountSet`

    Example:

        >>> data = Dataset([[1, 2], [2, 1], [3, 4], [4, 3], [5, 6], [6, 5]])
        >>> keys = generate_tie_keys(6, 2, seed=0)
        >>> quadrant_counts(data, keys).counts
        {(0, 1): 2}

    """
    (data, key_values) = _check_conforms(data, keys)
    indicators = np.column_stack([
        _indicators(data.values[:, j], key_values[:, j], data.half_n)
        for j in range(data.p)
    ])
    cross = indicators.T @ indicators
    counts = {(j, jp): int(cross[j, jp]) for (j, jp) in pair_indices(data.p)}
    return QuadrantCountSet(counts, data.n, data.p)


def sensitivity(p):
    """Return the l1 sensitivity of a single quadrant count and of the
    whole collection of p(p-1)/2 counts.

    Example:

        >>> sensitivity(5)
        Sensitivity(per_pair=1, total=10)

    """
    if p < 2:
        msg = 'Sensitivity needs p >= 2 (got {p})'
        raise ValidationError(msg.format(p=p))
    return Sensitivity(1, p * (p - 1) // 2)
