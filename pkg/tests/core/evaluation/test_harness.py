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
import os
import shutil
import tempfile
import unittest

# Third party imports
import numpy as np
import pandas as pd

# Local (privcorr) imports
from privcorr.core.evaluation import harness
from privcorr.core.evaluation.harness import (
    RECORD_COLUMNS, IncompatibleScenarioError, ScenarioError, SimScenario,
    records_frame, replicate_seeds, run_experiment, run_replicate
)
from privcorr.core.serialization import read_json


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(harness))
    return tests


def _scenario(**kwargs):
    fields = {
        'p': 2, 'n': 60, 'marginals': ['gamma(2, 1)', 'normal(0, 1)'],
        'epsilon_total': 1.0, 'runs': 3, 'master_seed': 99,
        'samples': 200, 'grid_size': 201,
    }
    fields.update(kwargs)
    return SimScenario(**fields)


class SimScenarioTestCase(unittest.TestCase):

    def test_marginal_strings_are_parsed(self):
        scenario = _scenario()
        self.assertEqual(scenario.to_dict()['marginals'],
                         ['gamma(2, 1)', 'normal(0, 1)'])

    def test_mle_needs_range_preserving_mechanism(self):
        with self.assertRaises(IncompatibleScenarioError):
            _scenario(estimator='mle', mechanism='geometric')

    def test_bayes_needs_geometric_mechanism(self):
        with self.assertRaises(IncompatibleScenarioError):
            _scenario(estimator='bayes', mechanism='btgm')

    def test_kendall_ignores_mechanism(self):
        scenario = _scenario(estimator='li-kendall', mechanism='rgm')
        self.assertEqual(scenario.mechanism, 'rgm')

    def test_invalid_fields(self):
        for kwargs in ({'p': 3}, {'n': 1}, {'runs': 0},
                       {'estimator': 'nuts'}, {'sampler': 'hmc'},
                       {'alpha': 0.0}, {'workers': 0}):
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ScenarioError):
                    _scenario(**kwargs)


class ReplicateTestCase(unittest.TestCase):

    def test_seeds_are_stable(self):
        self.assertEqual(replicate_seeds(7, 5)[:3], replicate_seeds(7, 3))

    def test_replicate_is_reproducible(self):
        scenario = _scenario()
        first = run_replicate(scenario=scenario, replicate=0, seed=123)
        second = run_replicate(scenario=scenario, replicate=0, seed=123)
        np.testing.assert_array_equal(first.estimate, second.estimate)
        np.testing.assert_array_equal(first.lower, second.lower)

    def test_estimators(self):
        for (estimator, mechanism) in (('bayes', 'geometric'),
                                       ('mle', 'btgm'),
                                       ('li-kendall', 'geometric')):
            scenario = _scenario(estimator=estimator, mechanism=mechanism,
                                 p=3, marginals=['exp(1)'] * 3,
                                 burn_in=200)
            record = run_replicate(scenario=scenario, replicate=0, seed=5)
            with self.subTest(estimator=estimator):
                self.assertEqual(record.p, 3)
                self.assertEqual(record.has_intervals,
                                 estimator == 'bayes')


class RunExperimentTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _paths(self, name):
        return (os.path.join(self.directory, name + '.json'),
                os.path.join(self.directory, name + '.csv'))

    def test_outputs_are_byte_identical(self):
        contents = []
        for name in ('first', 'second'):
            paths = self._paths(name)
            run_experiment(_scenario(), *paths)
            for path in paths:
                with open(path, 'rb') as file:
                    contents.append(file.read())
        self.assertEqual(contents[:2], contents[2:])

    def test_report_and_records(self):
        (report_path, records_path) = self._paths('run')
        result = run_experiment(_scenario(), report_path, records_path)
        self.assertEqual(result.report.replicates, 3)
        self.assertEqual([r.replicate for r in result.records], [0, 1, 2])
        document = read_json(report_path)
        self.assertEqual(document['scenario']['master_seed'], 99)
        self.assertIsNotNone(document['metrics']['coverage'])
        frame = pd.read_csv(records_path)
        self.assertEqual(list(frame.columns), RECORD_COLUMNS)
        self.assertEqual(len(frame), 3)

    def test_interval_level_follows_scenario(self):
        result = run_experiment(_scenario(alpha=0.2))
        self.assertEqual({record.alpha for record in result.records}, {0.2})
        self.assertEqual(result.report.alpha, 0.2)
        self.assertEqual(result.report.to_dict()['alpha'], 0.2)

    def test_workers_do_not_change_results(self):
        serial = run_experiment(_scenario(estimator='mle',
                                          mechanism='tgm'))
        parallel = run_experiment(_scenario(estimator='mle',
                                            mechanism='tgm', workers=2))
        self.assertEqual(serial.report.to_dict(),
                         parallel.report.to_dict())

    def test_point_estimator_records_have_no_intervals(self):
        result = run_experiment(_scenario(estimator='mle', mechanism='rgm'))
        frame = records_frame(result.records)
        self.assertTrue(frame['lo'].isna().all())
        self.assertIsNone(result.report.coverage)
