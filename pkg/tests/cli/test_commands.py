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
import configparser
import doctest
import io
import math
import os
import shutil
import tempfile
import unittest
from unittest import mock

# Third party imports
import numpy as np
import pandas as pd

# Local (privcorr) imports
from privcorr.cli import commands
from privcorr.cli.commands import (
    CliConfig, CliConfigError, create_config_cmd, estimate_bayes_cmd,
    estimate_mle_cmd, mechanism_pmf_cmd, privatize_cmd, verify_dp_cmd
)
from privcorr.core.config import ConfigFileError, ScenarioConfig
from privcorr.core.errors import DiagnosticError
from privcorr.core.serialization import read_json


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(commands))
    return tests


class CliConfigTestCase(unittest.TestCase):

    def test_defaults(self):
        config = CliConfig('estimate-bayes', input='in.json',
                           output='out.json')
        self.assertEqual((config.samples, config.sampler, config.alpha),
                         (1000, 'auto', 0.05))
        self.assertIsNone(config.mechanism)

    def test_regression_specs_are_parsed(self):
        config = CliConfig('estimate-bayes', input='in.json',
                           output='out.json', regression=['0,1,2'])
        self.assertEqual(config.regression, [(0, 1, 2)])

    def test_invalid_values(self):
        base = {'input': 'in.json', 'output': 'out.json'}
        for extra in ({'alpha': 1.5}, {'samples': 0},
                      {'regression': ['0,1']}, {'sampler': 'nuts'}):
            with self.subTest(extra=extra):
                with self.assertRaises(CliConfigError):
                    CliConfig('estimate-bayes', **dict(base, **extra))

    def test_bounds_order(self):
        with self.assertRaises(CliConfigError):
            CliConfig('verify-dp', mechanism='tgm', epsilon=1.0,
                      lower=5, upper=2)

    def test_unknown_command(self):
        with self.assertRaises(CliConfigError):
            CliConfig('plot')


class CommandTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        rng = np.random.default_rng(0)
        latent = rng.multivariate_normal(
            [0, 0, 0], [[1, 0.6, 0.2], [0.6, 1, 0.0], [0.2, 0.0, 1]], 400
        )
        self.data_path = self.path('data.csv')
        pd.DataFrame(np.exp(latent), columns=['a', 'b', 'c']).to_csv(
            self.data_path, index=False
        )

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, name):
        return os.path.join(self.directory, name)

    def _privatize(self, mechanism, name='counts.json', seed=1):
        config = CliConfig('privatize', input=self.data_path,
                           output=self.path(name), epsilon=3.0,
                           mechanism=mechanism, seed=seed)
        return privatize_cmd(config)

    def test_privatize_writes_only_public_fields(self):
        self._privatize('geometric')
        document = read_json(self.path('counts.json'))
        self.assertEqual(
            sorted(document),
            ['bounds', 'counts', 'delta_sensitivity', 'epsilon_pair',
             'epsilon_total', 'half_n', 'mechanism', 'n', 'p']
        )
        self.assertEqual(len(document['counts']), 3)
        self.assertEqual(document['half_n'], 200)

    def test_privatize_is_reproducible(self):
        self._privatize('btgm', 'first.json')
        self._privatize('btgm', 'second.json')
        with open(self.path('first.json'), 'rb') as first, \
                open(self.path('second.json'), 'rb') as second:
            self.assertEqual(first.read(), second.read())

    def test_mle_estimate(self):
        self._privatize('rgm')
        config = CliConfig('estimate-mle', input=self.path('counts.json'),
                           output=self.path('mle.json'))
        estimate_mle_cmd(config)
        document = read_json(self.path('mle.json'))
        self.assertEqual(document['estimator'], 'mle')
        self.assertEqual(len(document['matrix']), 3)
        self.assertIn('was_psd', document['projection'])

    def test_bayes_estimate_with_regression(self):
        self._privatize('geometric')
        config = CliConfig('estimate-bayes', input=self.path('counts.json'),
                           output=self.path('bayes.json'), samples=300,
                           burnin=300, seed=2, regression=['0,1,2'])
        estimate_bayes_cmd(config)
        document = read_json(self.path('bayes.json'))
        self.assertEqual(document['diagnostics']['method'], 'mh')
        self.assertEqual(len(document['summary']['intervals']), 3)
        self.assertEqual(len(document['monte_carlo_se']), 3)
        self.assertEqual(document['regression'][0]['target'], 0)
        self.assertEqual(document['samples'], 300)

    def test_verify_dp_failure_is_reported(self):
        config = CliConfig('verify-dp', mechanism='tgm', epsilon=0.5,
                           lower=0, upper=5, output=self.path('dp.json'))
        with mock.patch.object(commands, 'verify_dp_ratio',
                               return_value=math.inf):
            with self.assertRaises(DiagnosticError):
                verify_dp_cmd(config)
        document = read_json(self.path('dp.json'))
        self.assertFalse(document['satisfied'])
        self.assertEqual(document['max_privacy_loss'], 'inf')

    def test_verify_dp_success(self):
        config = CliConfig('verify-dp', mechanism='rgm', epsilon=0.5,
                           lower=0, upper=5, delta=2.0,
                           output=self.path('dp.json'))
        self.assertLessEqual(verify_dp_cmd(config), 0.5 + 1e-9)
        self.assertTrue(read_json(self.path('dp.json'))['satisfied'])

    def test_mechanism_pmf(self):
        config = CliConfig('mechanism-pmf', count=2, epsilon=1.0, lower=0,
                           upper=4, output=self.path('pmf.json'))
        mechanism_pmf_cmd(config)
        document = read_json(self.path('pmf.json'))
        self.assertEqual(sorted(document['mechanisms']),
                         ['btgm', 'rgm', 'tgm'])
        for entries in document['mechanisms'].values():
            total = sum(entry['probability'] for entry in entries)
            self.assertAlmostEqual(total, 1.0)
        self.assertLess(document['rgm_epsilon_prime'], 1.0)

    def test_create_config_writes_a_valid_scenario(self):
        path = self.path('scenario.cfg')
        self.assertEqual(create_config_cmd(CliConfig('create-config',
                                                     output=path)), path)
        written = configparser.ConfigParser()
        written.read(path)
        written.remove_section('Logging')
        text = io.StringIO()
        written.write(text)
        conf = ScenarioConfig()
        conf.read_string(text.getvalue())
        scenario = conf.scenario()
        self.assertEqual((scenario.p, scenario.estimator), (2, 'bayes'))

    def test_create_config_unwritable_path(self):
        config = CliConfig('create-config',
                           output=self.path(os.path.join('missing', 'a.cfg')))
        with self.assertRaises(ConfigFileError):
            create_config_cmd(config)

    def test_create_config_needs_output(self):
        with self.assertRaises(CliConfigError):
            CliConfig('create-config')
