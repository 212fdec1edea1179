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
import os.path
import sys

CONFIG_ROOT = os.path.join(os.path.dirname(__file__), 'samples')
CONFIG_PATH = 'scenario.cfg'


class ScenarioConfigCreator(object):
    """Generates a sample scenario configuration file (Microsoft Windows
    INI style): the bivariate coverage study at n = 500, epsilon = 1.

    """

    def create_config(self, path=CONFIG_PATH):
        """Write a sample scenario configuration to `path`.
        Any existing file at `path` will be overwritten.

        """

        self.config = configparser.ConfigParser()

        # Each of the following methods adds one section to the config file
        self._scenario_config()
        self._sampler_config()
        self._evaluation_config()
        self._logging_config()

        # All set up - let's write the config file!
        with open(path, 'w') as configfile:
            self.config.write(configfile)

    def _scenario_config(self):
        # The data-generating process: p variables with the listed
        # marginals (separated by ';'), n records per dataset and a fresh
        # Wishart truth matrix per replicate. epsilon is the total budget,
        # split evenly over the p(p-1)/2 quadrant counts.
        # Estimators: bayes (needs mechanism = geometric), mle (needs
        # tgm, btgm or rgm) and li-kendall (ignores mechanism).
        self.config.add_section('Scenario')
        self.config.set('Scenario', 'p', '2')
        self.config.set('Scenario', 'n', '500')
        self.config.set('Scenario', 'epsilon', '1')
        self.config.set('Scenario', 'mechanism', 'geometric')
        self.config.set('Scenario', 'estimator', 'bayes')
        self.config.set('Scenario', 'runs', '500')
        self.config.set('Scenario', 'seed', '20240501')
        self.config.set('Scenario', 'marginals', 'gamma(2, 1); normal(0, 1)')

    def _sampler_config(self):
        # Posterior draws kept after burn-in; for p = 2 the 'auto' method
        # uses an exact grid of gridsize cells instead of Metropolis.
        # alpha sets equal-tailed (1 - alpha) intervals; '5%' also works.
        self.config.add_section('Sampler')
        self.config.set('Sampler', 'samples', '1000')
        self.config.set('Sampler', 'burnin', '1000')
        self.config.set('Sampler', 'gridsize', '2001')
        self.config.set('Sampler', 'alpha', '0.05')
        self.config.set('Sampler', 'method', 'auto')

    def _evaluation_config(self):
        # binwidth must split [-1, 1] into whole bins (0.2, 0.4, ...).
        # workers > 1 runs replicates in a process pool; results do not
        # depend on the number of workers.
        self.config.add_section('Evaluation')
        self.config.set('Evaluation', 'binwidth', '0.4')
        self.config.set('Evaluation', 'workers', '1')

    def _logging_config(self):
        # Optional path to a logging.config file, relative to this file.
        self.config.add_section('Logging')
        self.config.set('Logging', 'ConfigFile',
                        os.path.join(CONFIG_ROOT, 'logging.cfg'))


# Main entry point.
if __name__ == '__main__':
    conf_writer = ScenarioConfigCreator()
    conf_writer.create_config(*sys.argv[1:2])
