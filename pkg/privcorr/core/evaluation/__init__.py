# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Simulation experiments and their accuracy metrics. """

from privcorr.core.evaluation.harness import (
    ESTIMATORS, ExperimentResult, IncompatibleScenarioError, ScenarioError,
    SimScenario, records_frame, run_experiment, run_replicate
)
from privcorr.core.evaluation.metrics import (
    BinWidthError, EmptyRecordsError, IntervalLevelError, MetricsError,
    MetricsReport, MissingIntervalsError, RunRecord, binned_metrics,
    coverage_and_length, mae
)

__all__ = [
    "BinWidthError", "ESTIMATORS", "EmptyRecordsError", "ExperimentResult",
    "IncompatibleScenarioError", "IntervalLevelError", "MetricsError",
    "MetricsReport", "MissingIntervalsError", "RunRecord", "ScenarioError",
    "SimScenario", "binned_metrics", "coverage_and_length", "mae",
    "records_frame", "run_experiment", "run_replicate",
]
