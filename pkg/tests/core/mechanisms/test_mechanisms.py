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
from privcorr.core import mechanisms
from privcorr.core.mechanisms import (
    BoundsError, BudgetError, MechanismError, NoisyCountSet, PrivacyBudget,
    UnknownMechanismError, check_mechanism, privatize_counts
)
from privcorr.core.quadrant_stats import (
    QuadrantCountSet, generate_tie_keys, quadrant_counts
)


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(mechanisms))
    return tests


def _counts(p=3, n=40, seed=0):
    values = np.random.default_rng(seed).standard_normal((n, p))
    return quadrant_counts(values, generate_tie_keys(n, p, seed=seed))


class CheckMechanismTestCase(unittest.TestCase):

    def test_known_names(self):
        for name in ('geometric', 'tgm', 'btgm', 'rgm'):
            self.assertEqual(check_mechanism(name), name)

    def test_unknown_name(self):
        with self.assertRaises(UnknownMechanismError):
            check_mechanism('laplace')


class PrivatizeCountsTestCase(unittest.TestCase):

    def test_seeded_release_is_reproducible(self):
        counts = _counts()
        budget = PrivacyBudget(1.0, 3)
        for mechanism in ('geometric', 'tgm', 'btgm', 'rgm'):
            first = privatize_counts(counts, budget, mechanism,
                                     np.random.default_rng(12))
            second = privatize_counts(counts, budget, mechanism,
                                      np.random.default_rng(12))
            self.assertEqual(first, second)

    def test_range_preserving_outputs_stay_in_range(self):
        counts = _counts(p=4, n=30)
        budget = PrivacyBudget(0.2, 4)
        rng = np.random.default_rng(1)
        for mechanism in ('tgm', 'btgm', 'rgm'):
            for _ in range(20):
                noisy = privatize_counts(counts, budget, mechanism, rng)
                self.assertEqual(noisy.bounds, (0, 15))
                for value in noisy.noisy.values():
                    self.assertTrue(0 <= value <= 15)

    def test_rounded_btgm_gives_integers(self):
        noisy = privatize_counts(_counts(), PrivacyBudget(0.5, 3), 'btgm',
                                 np.random.default_rng(2), round_output=True)
        self.assertTrue(all(isinstance(value, int)
                            for value in noisy.noisy.values()))

    def test_geometric_has_no_bounds(self):
        noisy = privatize_counts(_counts(), PrivacyBudget(0.5, 3),
                                 'geometric', np.random.default_rng(2))
        self.assertIsNone(noisy.bounds)
        self.assertFalse(noisy.range_preserving)

    def test_budget_dimension_mismatch(self):
        with self.assertRaises(BudgetError):
            privatize_counts(_counts(p=3), PrivacyBudget(1.0, 4))

    def test_large_epsilon_recovers_counts(self):
        counts = _counts(p=3, n=60)
        noisy = privatize_counts(counts, PrivacyBudget(300.0, 3), 'tgm',
                                 np.random.default_rng(3))
        self.assertEqual(noisy.noisy, counts.counts)


class NoisyCountSetTestCase(unittest.TestCase):

    def setUp(self):
        self.budget = PrivacyBudget(1.0, 2)

    def test_document_round_trip(self):
        noisy = NoisyCountSet({(0, 1): 2.5}, 'btgm', self.budget, 10)
        document = noisy.to_dict()
        self.assertEqual(document['half_n'], 5)
        self.assertEqual(document['bounds'], [0, 5])
        self.assertEqual(NoisyCountSet.from_dict(document), noisy)

    def test_integer_mechanisms_reject_fractions(self):
        with self.assertRaises(MechanismError):
            NoisyCountSet({(0, 1): 2.5}, 'tgm', self.budget, 10)

    def test_range_preserving_bounds_are_enforced(self):
        with self.assertRaises(BoundsError):
            NoisyCountSet({(0, 1): 6}, 'rgm', self.budget, 10)

    def test_geometric_counts_may_leave_range(self):
        noisy = NoisyCountSet({(0, 1): -4}, 'geometric', self.budget, 10)
        self.assertEqual(noisy.noisy[(0, 1)], -4)

    def test_missing_pairs(self):
        with self.assertRaises(MechanismError):
            NoisyCountSet({}, 'geometric', self.budget, 10)

    def test_malformed_document(self):
        with self.assertRaises(MechanismError):
            NoisyCountSet.from_dict({'p': 2})

    def test_count_set_from_quadrant_counts(self):
        counts = QuadrantCountSet({(0, 1): 3}, 10, 2)
        noisy = privatize_counts(counts, self.budget, 'geometric',
                                 np.random.default_rng(0))
        self.assertEqual(noisy.n, 10)
        self.assertEqual(noisy.epsilon_pair, 1.0)
