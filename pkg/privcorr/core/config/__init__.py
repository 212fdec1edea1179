# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" privcorr scenario config module. """

# Local imports
from privcorr.core.config.parse_config import (
    ConfigError, ConfigFileError, ConfigInitialisationError,
    ConfigNotInitialisedError, ConfigValidationError, LogInitialisationError,
    ScenarioConfig
)

__all__ = [
    "ConfigError", "ConfigFileError", "ConfigInitialisationError",
    "ConfigNotInitialisedError", "ConfigValidationError",
    "LogInitialisationError", "ScenarioConfig",
]
