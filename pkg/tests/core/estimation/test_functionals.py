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
import unittest

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.estimation.correlation import (
    EstimationError, PosteriorDraws
)
from privcorr.core.estimation.functionals import conditional_regression_coef


def _draws(matrices):
    return PosteriorDraws(np.array(matrices, dtype=float))


R = [[1.0, 0.5, 0.3], [0.5, 1.0, 0.2], [0.3, 0.2, 1.0]]


class ConditionalRegressionTestCase(unittest.TestCase):

    def test_known_coefficient(self):
        summary = conditional_regression_coef(_draws([R, R]), 0, 1, 2)
        self.assertAlmostEqual(summary.mean, (0.5 - 0.3 * 0.2) / 0.96)
        self.assertAlmostEqual(summary.lower, summary.upper)
        self.assertEqual((summary.used, summary.excluded), (2, 0))

    def test_uncorrelated_control(self):
        matrix = [[1.0, 0.4, 0.0], [0.4, 1.0, 0.0], [0.0, 0.0, 1.0]]
        summary = conditional_regression_coef(_draws([matrix]), 0, 1, 2)
        self.assertAlmostEqual(summary.mean, 0.4)

    def test_degenerate_draws_are_excluded(self):
        degenerate = [[1.0, 0.5, 0.5], [0.5, 1.0, 1.0], [0.5, 1.0, 1.0]]
        summary = conditional_regression_coef(
            _draws([R, degenerate, R]), 0, 1, 2
        )
        self.assertEqual((summary.used, summary.excluded), (2, 1))

    def test_all_degenerate(self):
        degenerate = [[1.0, 0.5, 0.5], [0.5, 1.0, 1.0], [0.5, 1.0, 1.0]]
        with self.assertRaises(EstimationError):
            conditional_regression_coef(_draws([degenerate]), 0, 1, 2)

    def test_indices_must_be_distinct(self):
        with self.assertRaises(EstimationError):
            conditional_regression_coef(_draws([R]), 0, 0, 2)

    def test_indices_in_range(self):
        with self.assertRaises(EstimationError):
            conditional_regression_coef(_draws([R]), 0, 1, 3)
