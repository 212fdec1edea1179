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
from fractions import Fraction

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.mechanisms import truncated
from privcorr.core.mechanisms.errors import BoundsError
from privcorr.core.mechanisms.truncated import (
    BoundedCountQuery, btgm, btgm_posterior_mean, tgm
)
from privcorr.core.simulation.oracles import brute_force_btgm_posterior_mean


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(truncated))
    return tests


class BoundedCountQueryTestCase(unittest.TestCase):

    def test_count_outside_bounds(self):
        with self.assertRaises(BoundsError):
            BoundedCountQuery(5, 0, 4)

    def test_inverted_bounds(self):
        with self.assertRaises(BoundsError):
            BoundedCountQuery(0, 3, 1)


class BTGMPosteriorMeanTestCase(unittest.TestCase):

    def test_worked_example(self):
        value = btgm_posterior_mean(-5, 0, 2, 0.5)
        self.assertAlmostEqual(value, 4 / 7, places=12)
        self.assertEqual(
            brute_force_btgm_posterior_mean(-5, 0, 2, Fraction(1, 2)),
            Fraction(4, 7)
        )

    def test_closed_form_matches_direct_sum(self):
        for upper in (1, 2, 5, 10, 25):
            for alpha in (0.05, 0.3, 0.5, 0.9, 0.99, 0.9995):
                for m in range(-3, upper + 4):
                    expected = float(
                        brute_force_btgm_posterior_mean(m, 0, upper, alpha)
                    )
                    with self.subTest(upper=upper, alpha=alpha, m=m):
                        self.assertAlmostEqual(
                            btgm_posterior_mean(m, 0, upper, alpha),
                            expected, delta=1e-7 * max(1, upper)
                        )

    def test_closed_form_accuracy_over_wide_bounds(self):
        # E(M | m) depends only on m - L and U - L, and is constant for m
        # outside [L - 1, U + 1], so exact references are shared.
        alphas = {0.1: Fraction(1, 10), 0.5: Fraction(1, 2),
                  0.9: Fraction(9, 10)}
        exact = {}

        def reference(offset, width, alpha):
            offset = min(width + 1, max(-1, offset))
            key = (offset, width, alpha)
            if key not in exact:
                exact[key] = float(brute_force_btgm_posterior_mean(
                    offset, 0, width, alphas[alpha]
                ))
            return exact[key]

        for alpha in sorted(alphas):
            worst = 0.0
            for lower in range(0, 51):
                for upper in range(lower, 51):
                    width = upper - lower
                    for m in range(lower - 20, upper + 21):
                        value = btgm_posterior_mean(m, lower, upper, alpha)
                        expected = lower + reference(m - lower, width, alpha)
                        worst = max(worst, abs(value - expected))
            with self.subTest(alpha=alpha):
                self.assertLessEqual(worst, 1e-10)

    def test_shifted_bounds(self):
        self.assertAlmostEqual(
            btgm_posterior_mean(12, 10, 14, 0.4),
            btgm_posterior_mean(2, 0, 4, 0.4) + 10
        )

    def test_outside_range_values_collapse(self):
        self.assertAlmostEqual(
            btgm_posterior_mean(-7, 0, 6, 0.6),
            btgm_posterior_mean(-1, 0, 6, 0.6)
        )
        self.assertAlmostEqual(
            btgm_posterior_mean(30, 0, 6, 0.6),
            btgm_posterior_mean(7, 0, 6, 0.6)
        )

    def test_degenerate_bounds(self):
        self.assertEqual(btgm_posterior_mean(4, 3, 3, 0.5), 3.0)

    def test_zero_alpha_clamps(self):
        self.assertEqual(btgm_posterior_mean(9, 0, 5, 0.0), 5.0)


class ReleaseTestCase(unittest.TestCase):

    def test_tgm_stays_in_bounds(self):
        rng = np.random.default_rng(3)
        query = BoundedCountQuery(1, 0, 4)
        values = {tgm(query, 0.1, rng=rng) for _ in range(500)}
        self.assertTrue(values <= set(range(5)))
        self.assertIn(0, values)
        self.assertIn(4, values)

    def test_btgm_stays_in_bounds(self):
        rng = np.random.default_rng(4)
        query = BoundedCountQuery(0, 0, 10)
        for _ in range(500):
            value = btgm(query, 0.2, rng=rng)
            self.assertTrue(0.0 <= value <= 10.0)

    def test_btgm_rounded_output(self):
        rng = np.random.default_rng(5)
        value = btgm(BoundedCountQuery(3, 0, 6), 0.5, rng=rng,
                     round_output=True)
        self.assertIsInstance(value, int)
