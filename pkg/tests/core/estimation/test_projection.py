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
from privcorr.core.estimation import projection
from privcorr.core.estimation.correlation import EstimationError, is_psd
from privcorr.core.estimation.projection import (
    ProjectionConvergenceError, nearest_correlation
)


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(projection))
    return tests


class NearestCorrelationTestCase(unittest.TestCase):

    def test_psd_input_is_unchanged(self):
        matrix = np.array([[1.0, 0.3], [0.3, 1.0]])
        result = nearest_correlation(matrix)
        self.assertTrue(result.was_psd)
        self.assertEqual(result.frobenius_adjustment, 0.0)
        np.testing.assert_array_equal(result.matrix.entries, matrix)

    def test_non_psd_input_is_repaired(self):
        matrix = [[1, 0.9, 0.9], [0.9, 1, -0.9], [0.9, -0.9, 1]]
        result = nearest_correlation(matrix)
        self.assertFalse(result.was_psd)
        self.assertGreater(result.iterations, 0)
        self.assertTrue(is_psd(result.matrix.entries))
        np.testing.assert_allclose(np.diag(result.matrix.entries), 1.0)
        self.assertGreater(result.frobenius_adjustment, 0.0)

    def test_known_nearest_matrix(self):
        matrix = [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
        expected = [[1.0, 0.7607, 0.1573],
                    [0.7607, 1.0, 0.7607],
                    [0.1573, 0.7607, 1.0]]
        result = nearest_correlation(matrix)
        np.testing.assert_allclose(result.matrix.entries, expected,
                                   atol=1e-3)

    def test_indefinite_mixed_sign_matrix(self):
        matrix = np.array([[1.0, 0.9, 0.9],
                           [0.9, 1.0, -0.9],
                           [0.9, -0.9, 1.0]])
        # Flipping the sign of the first variable gives a constant -0.9
        # off-diagonal whose nearest correlation matrix is constant -0.5.
        expected = np.array([[1.0, 0.5, 0.5],
                             [0.5, 1.0, -0.5],
                             [0.5, -0.5, 1.0]])
        result = nearest_correlation(matrix)
        self.assertFalse(result.was_psd)
        np.testing.assert_allclose(result.matrix.entries, expected,
                                   atol=1e-4)
        np.testing.assert_allclose(np.diag(result.matrix.entries), 1.0)
        self.assertTrue(is_psd(result.matrix.entries))

    def test_idempotent(self):
        matrix = [[1, 0.95, -0.8], [0.95, 1, 0.7], [-0.8, 0.7, 1]]
        first = nearest_correlation(matrix).matrix
        second = nearest_correlation(first.entries)
        self.assertTrue(second.was_psd)
        np.testing.assert_allclose(second.matrix.entries, first.entries,
                                   atol=1e-12)

    def test_closer_than_eigenvalue_clipping(self):
        matrix = np.array([[1, 0.9, 0.9], [0.9, 1, -0.9], [0.9, -0.9, 1]])
        (values, vectors) = np.linalg.eigh(matrix)
        clipped = (vectors * np.maximum(values, 1e-10)) @ vectors.T
        scale = 1 / np.sqrt(np.diag(clipped))
        clipped = clipped * np.outer(scale, scale)
        result = nearest_correlation(matrix)
        self.assertLessEqual(result.frobenius_adjustment,
                             np.linalg.norm(clipped - matrix) + 1e-8)

    def test_iteration_cap(self):
        matrix = [[1, 0.99, 0.99], [0.99, 1, -0.99], [0.99, -0.99, 1]]
        with self.assertRaises(ProjectionConvergenceError):
            nearest_correlation(matrix, tolerance=1e-15, max_iterations=2)

    def test_rejects_non_square(self):
        with self.assertRaises(EstimationError):
            nearest_correlation(np.ones((2, 3)))
