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
import os
import unittest

# Slow reproduction studies (coverage tables, MAE ordering) only run when
# PRIVCORR_SLOW_TESTS is set in the environment.
SLOW_TESTS = bool(os.environ.get('PRIVCORR_SLOW_TESTS'))

slow = unittest.skipUnless(SLOW_TESTS, 'set PRIVCORR_SLOW_TESTS to run')
