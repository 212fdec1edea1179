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
import doctest
import unittest

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core import quadrant_stats
from privcorr.core.quadrant_stats import (
    CountRangeError, Dataset, InvalidDatasetError, QuadrantCountSet,
    ShapeMismatchError, above_median_indicators, generate_tie_keys,
    half_count, pair_indices, quadrant_counts, sensitivity
)


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(quadrant_stats))
    return tests


class DatasetTestCase(unittest.TestCase):

    def test_rejects_non_finite(self):
        with self.assertRaises(InvalidDatasetError):
            Dataset([[1.0, np.nan], [2.0, 3.0]])

    def test_rejects_single_column(self):
        with self.assertRaises(InvalidDatasetError):
            Dataset([[1.0], [2.0], [3.0]])

    def test_rejects_one_record(self):
        with self.assertRaises(InvalidDatasetError):
            Dataset([[1.0, 2.0]])

    def test_rejects_text(self):
        with self.assertRaises(InvalidDatasetError):
            Dataset([['a', 'b'], ['c', 'd']])

    def test_values_are_read_only(self):
        data = Dataset([[1.0, 2.0], [3.0, 4.0]])
        with self.assertRaises(ValueError):
            data.values[0, 0] = 9.0

    def test_half_n_rounds_up(self):
        self.assertEqual(half_count(6), 3)
        self.assertEqual(half_count(7), 4)
        self.assertEqual(Dataset(np.zeros((7, 2))).half_n, 4)


class TieKeyTestCase(unittest.TestCase):

    def test_seeded_keys_are_reproducible(self):
        a = generate_tie_keys(50, 3, seed=11)
        b = generate_tie_keys(50, 3, seed=11)
        np.testing.assert_array_equal(a.keys, b.keys)
        self.assertEqual(a.seed_provenance, 11)

    def test_columns_have_distinct_keys(self):
        keys = generate_tie_keys(1000, 4, seed=3).keys
        for j in range(4):
            self.assertEqual(np.unique(keys[:, j]).size, 1000)

    def test_different_seeds_differ(self):
        a = generate_tie_keys(10, 2, seed=1)
        b = generate_tie_keys(10, 2, seed=2)
        self.assertFalse(np.array_equal(a.keys, b.keys))


class QuadrantCountTestCase(unittest.TestCase):

    def test_comonotone_pair_counts_half_n(self):
        x = np.arange(10.0)
        data = Dataset(np.column_stack([x, 2 * x + 1]))
        counts = quadrant_counts(data, generate_tie_keys(10, 2, seed=0))
        self.assertEqual(counts.counts[(0, 1)], 5)

    def test_countermonotone_pair_counts_zero(self):
        x = np.arange(10.0)
        data = Dataset(np.column_stack([x, -x]))
        counts = quadrant_counts(data, generate_tie_keys(10, 2, seed=0))
        self.assertEqual(counts.counts[(0, 1)], 0)

    def test_odd_n_uses_upper_half(self):
        x = np.arange(5.0)
        data = Dataset(np.column_stack([x, x]))
        counts = quadrant_counts(data, generate_tie_keys(5, 2, seed=0))
        self.assertEqual(counts.half_n, 3)
        self.assertEqual(counts.counts[(0, 1)], 3)

    def test_all_ties_resolved_by_keys(self):
        data = Dataset(np.ones((8, 2)))
        keys = generate_tie_keys(8, 2, seed=5)
        for j in range(2):
            indicators = above_median_indicators(data, keys, j)
            self.assertEqual(indicators.sum(), 4)
            order = np.argsort(keys.keys[:, j])
            np.testing.assert_array_equal(indicators[order], [0] * 4 + [1] * 4)

    def test_monotone_transform_invariance(self):
        rng = np.random.default_rng(0)
        values = rng.standard_normal((101, 3))
        keys = generate_tie_keys(101, 3, seed=9)
        transformed = np.column_stack([
            np.exp(values[:, 0]), values[:, 1] ** 3, 5 * values[:, 2] - 2
        ])
        self.assertEqual(quadrant_counts(values, keys),
                         quadrant_counts(transformed, keys))

    def test_pairs_in_lexicographic_order(self):
        data = Dataset(np.random.default_rng(1).standard_normal((20, 4)))
        counts = quadrant_counts(data, generate_tie_keys(20, 4, seed=1))
        self.assertEqual(counts.pairs(), pair_indices(4))
        self.assertEqual(len(counts.pairs()), 6)

    def test_shape_mismatch(self):
        data = Dataset(np.zeros((6, 2)))
        with self.assertRaises(ShapeMismatchError):
            quadrant_counts(data, generate_tie_keys(6, 3, seed=0))

    def test_count_set_round_trip(self):
        counts = QuadrantCountSet({(0, 1): 2, (0, 2): 0, (1, 2): 3}, 6, 3)
        self.assertEqual(QuadrantCountSet.from_dict(counts.to_dict()),
                         counts)

    def test_count_out_of_range(self):
        with self.assertRaises(CountRangeError):
            QuadrantCountSet({(0, 1): 4}, 6, 2)

    def test_missing_pair(self):
        with self.assertRaises(CountRangeError):
            QuadrantCountSet({(0, 1): 1}, 6, 3)


class SensitivityTestCase(unittest.TestCase):
    """Replacing one record changes any quadrant count by at most one."""

    def _check_neighbours(self, rng, discrete):
        (n, p) = (int(rng.integers(2, 30)), 3)
        if discrete:
            values = rng.integers(0, 3, size=(n, p)).astype(float)
        else:
            values = rng.standard_normal((n, p))
        keys = generate_tie_keys(n, p, seed=int(rng.integers(2 ** 31)))
        neighbour = values.copy()
        row = int(rng.integers(n))
        if discrete:
            neighbour[row] = rng.integers(0, 3, size=p)
        else:
            neighbour[row] = rng.standard_normal(p) * 3
        before = quadrant_counts(values, keys).counts
        after = quadrant_counts(neighbour, keys).counts
        for pair in before:
            self.assertLessEqual(abs(before[pair] - after[pair]), 1)

    def test_neighbouring_datasets(self):
        rng = np.random.default_rng(2024)
        for trial in range(1000):
            self._check_neighbours(rng, discrete=trial % 2 == 0)

    def test_collection_sensitivity(self):
        self.assertEqual(sensitivity(2).total, 1)
        self.assertEqual(sensitivity(10).total, 45)
