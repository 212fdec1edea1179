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
from privcorr.core.evaluation import metrics
from privcorr.core.evaluation.metrics import (
    BinWidthError, EmptyRecordsError, IntervalLevelError, MetricsError,
    MetricsReport, MissingIntervalsError, RunRecord, bin_edges, bin_index,
    binned_metrics, coverage_and_length, mae
)


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(metrics))
    return tests


def _matrix(r):
    return [[1.0, r], [r, 1.0]]


def _record(replicate, truth, estimate, interval=None, alpha=None):
    (lower, upper) = ([interval[0]], [interval[1]]) if interval else \
        (None, None)
    return RunRecord(replicate, _matrix(truth), _matrix(estimate),
                     lower, upper, alpha=alpha)


class RunRecordTestCase(unittest.TestCase):

    def test_interval_bounds_are_inclusive(self):
        record = _record(0, 0.5, 0.4, (0.5, 0.7))
        self.assertTrue(record.covered()[0])

    def test_shape_mismatch(self):
        with self.assertRaises(MetricsError):
            RunRecord(0, np.eye(2), np.eye(3))

    def test_one_sided_interval(self):
        with self.assertRaises(MetricsError):
            RunRecord(0, np.eye(2), np.eye(2), lower=[0.0])


class HeadlineMetricsTestCase(unittest.TestCase):

    def test_mae_averages_replicates(self):
        records = [_record(0, 0.1, 0.2), _record(1, -0.5, 0.0)]
        self.assertAlmostEqual(mae(records), 0.3)

    def test_coverage_and_length(self):
        records = [
            _record(0, 0.1, 0.2, (0.0, 0.4)),
            _record(1, 0.9, 0.5, (0.3, 0.6)),
        ]
        (coverage, length) = coverage_and_length(records)
        self.assertEqual(coverage, 0.5)
        self.assertAlmostEqual(length, 0.35)

    def test_interval_level_must_match(self):
        records = [
            _record(0, 0.1, 0.2, (0.0, 0.4), alpha=0.1),
            _record(1, 0.9, 0.5, (0.3, 0.6), alpha=0.1),
        ]
        (coverage, _) = coverage_and_length(records, alpha=0.1)
        self.assertEqual(coverage, 0.5)
        with self.assertRaises(IntervalLevelError):
            coverage_and_length(records)
        with self.assertRaises(IntervalLevelError):
            coverage_and_length(records, alpha=1.5)

    def test_unrecorded_level_is_accepted(self):
        records = [_record(0, 0.1, 0.2, (0.0, 0.4))]
        self.assertEqual(coverage_and_length(records, alpha=0.2)[0], 1.0)

    def test_missing_intervals(self):
        with self.assertRaises(MissingIntervalsError):
            coverage_and_length([_record(0, 0.1, 0.2)])

    def test_no_records(self):
        with self.assertRaises(EmptyRecordsError):
            mae([])


class BinningTestCase(unittest.TestCase):

    def test_edges(self):
        self.assertEqual(bin_edges(0.2).size, 11)
        self.assertEqual(bin_edges(2.0).tolist(), [-1.0, 1.0])

    def test_uneven_width(self):
        for width in (0.3, 0.0, -0.4):
            with self.assertRaises(BinWidthError):
                bin_edges(width)

    def test_boundaries(self):
        edges = bin_edges(0.4)
        np.testing.assert_array_equal(
            bin_index([-1.0, -0.6, 0.2, 1.0], edges), [0, 1, 3, 4]
        )

    def test_binned_breakdown(self):
        records = [
            _record(0, -0.9, -0.8, (-1.0, -0.7)),
            _record(1, 0.7, 0.5, (0.4, 0.6)),
            _record(2, 0.8, 0.8, (0.6, 0.9)),
        ]
        bins = binned_metrics(records, 0.4)
        self.assertEqual([b['count'] for b in bins], [1, 0, 0, 0, 2])
        self.assertIsNone(bins[1]['mae'])
        self.assertAlmostEqual(bins[4]['mae'], 0.1)
        self.assertEqual(bins[4]['coverage'], 0.5)
        self.assertIsNone(bins[0]['mae_se'])

    def test_no_interval_fields_without_intervals(self):
        bins = binned_metrics([_record(0, 0.1, 0.2)], 1.0)
        self.assertNotIn('coverage', bins[0])


class MetricsReportTestCase(unittest.TestCase):

    def test_order_does_not_matter(self):
        records = [_record(k, r, r + 0.1, (r - 0.2, r + 0.05))
                   for (k, r) in enumerate(np.linspace(-0.8, 0.8, 7))]
        forward = MetricsReport.from_records(records).to_dict()
        backward = MetricsReport.from_records(records[::-1]).to_dict()
        self.assertEqual(forward, backward)

    def test_point_estimators_report_no_coverage(self):
        report = MetricsReport.from_records(
            [_record(0, 0.1, 0.2), _record(1, 0.3, 0.2)]
        )
        self.assertIsNone(report.coverage)
        self.assertIsNotNone(report.mae_se)
        self.assertEqual(report.pair_observations, 2)

    def test_report_carries_interval_level(self):
        records = [_record(k, 0.1 * k, 0.1 * k, (-0.5, 0.5), alpha=0.2)
                   for k in range(3)]
        report = MetricsReport.from_records(records, alpha=0.2)
        self.assertEqual(report.to_dict()['alpha'], 0.2)
        self.assertIsNone(MetricsReport.from_records(
            [_record(0, 0.1, 0.2)]
        ).alpha)
        with self.assertRaises(IntervalLevelError):
            MetricsReport.from_records(records)

    def test_coverage_bounds(self):
        with self.assertRaises(MetricsError):
            MetricsReport(1, 1, 0.1, None, coverage=1.5)
