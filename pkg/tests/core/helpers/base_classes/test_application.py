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
import logging
import os
import shutil
import tempfile
import unittest
from unittest import mock

# Local (privcorr) imports
from privcorr.core.helpers.base_classes import application
from privcorr.core.helpers.base_classes.application import (
    Application, ApplicationLoggingError, ApplicationWithBasicLogging
)


def load_tests(loader, tests, ignore):
    """Add the module doctests to the suite."""
    tests.addTests(doctest.DocTestSuite(application))
    return tests


class _Echo(Application):

    def _add_arguments(self, arg_parser):
        arg_parser.add_argument('--value', type=int, default=1)

    def _handle_arguments(self, args):
        self.value = args.value


class ApplicationTestCase(unittest.TestCase):

    def test_delegates_argument_handling(self):
        app = _Echo('echo')
        args = app.process_arguments(['--value', '3'])
        self.assertEqual((args.value, app.value), (3, 3))

    def test_start_is_abstract(self):
        with self.assertRaises(NotImplementedError):
            Application('abstract').start()


class ApplicationWithBasicLoggingTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_verbose_selects_info(self):
        app = ApplicationWithBasicLogging('app')
        with mock.patch.object(logging, 'basicConfig') as basic_config:
            args = app.process_arguments(['--verbose'])
        self.assertTrue(args.verbose)
        self.assertEqual(basic_config.call_args[1]['level'], logging.INFO)

    def test_quiet_by_default(self):
        app = ApplicationWithBasicLogging('app')
        with mock.patch.object(logging, 'basicConfig') as basic_config:
            app.process_arguments([])
        self.assertEqual(basic_config.call_args[1]['level'],
                         logging.WARNING)

    def test_missing_log_config(self):
        app = ApplicationWithBasicLogging('app')
        path = os.path.join(self.directory, 'missing.cfg')
        with self.assertRaises(ApplicationLoggingError):
            app.process_arguments(['--log-config', path])
