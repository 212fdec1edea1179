# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" privcorr module. """

__author__ = 'The privcorr developers'
__copyright__ = "Copyright (C) 2024-2026 {author}".format(author=__author__)
__license__ = "Apache Software License 2.0"
__email__ = 'privcorr-dev@googlegroups.com'
__version__ = '0.1.0'
__shortdescription__ = (
    "privcorr estimates Gaussian copula correlation matrices under "
    "differential privacy from median-quadrant counts."
)
