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
import sys

# Local (privcorr) imports
from privcorr.cli import main

if __name__ == '__main__':
    sys.exit(main())
