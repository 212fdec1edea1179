# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Replicated simulation experiments.

Each replicate draws a truth correlation matrix, samples a copula dataset,
computes and privatizes the quadrant counts and runs the configured
estimator. Replicate h draws everything from a generator seeded with the
h-th child of the master :class:`numpy.random.SeedSequence`, so results
do not depend on how replicates are scheduled across worker processes.

"""

# Standard library imports
import collections
import concurrent.futures
import logging
import time

# Third party imports
import numpy as np
import pandas as pd

# Local (privcorr) imports
from privcorr.core import serialization
from privcorr.core.errors import ValidationError
from privcorr.core.estimation import (
    estimate_bayes, li_kendall_baseline, mle_matrix
)
from privcorr.core.estimation.bayes import (
    DEFAULT_BURN_IN, DEFAULT_GRID_SIZE, DEFAULT_SAMPLES, SAMPLERS
)
from privcorr.core.evaluation.metrics import MetricsReport, RunRecord
from privcorr.core.helpers.decorators import log_exception
from privcorr.core.mechanisms import (
    RANGE_PRESERVING, PrivacyBudget, check_epsilon, check_mechanism,
    privatize_counts
)
from privcorr.core.quadrant_stats import generate_tie_keys, quadrant_counts
from privcorr.core.simulation import (
    MarginalSpec, random_correlation, sample_copula
)

log = logging.getLogger(__name__)

ESTIMATORS = ('bayes', 'mle', 'li-kendall')
RECORD_COLUMNS = ['replicate', 'j', 'jp', 'truth_r', 'est_r', 'lo', 'hi',
                  'seed']
DEFAULT_BIN_WIDTH = 0.4


class IncompatibleScenarioError(ValidationError):
    """Raised before any replicate runs when the estimator cannot use
    counts from the chosen mechanism.

    """
    pass


class ScenarioError(ValidationError):
    """Raised when a scenario field is missing or out of range."""
    pass


ExperimentResult = collections.namedtuple(
    'ExperimentResult', ['report', 'records']
)


class SimScenario(object):
    """A simulation study design.

    :param int p: the number of variables.
    :param int n: records per dataset.
    :param marginals: p :class:`~privcorr.core.simulation.MarginalSpec`
        (or strings they parse from).
    :param float epsilon_total: the overall privacy budget.
    :param string mechanism: how counts are released.
    :param string estimator: one of 'bayes', 'mle' or 'li-kendall'.
    :param int runs: the number of replicates.
    :param master_seed: the seed of every replicate stream; None draws
        fresh entropy, which is then logged.
    :raises ScenarioError: on inconsistent or out-of-range fields.
    :raises IncompatibleScenarioError: for an estimator/mechanism
        pairing that cannot work.

    """

    def __init__(self, p, n, marginals, epsilon_total, mechanism='geometric',
                 estimator='bayes', runs=500, master_seed=None,
                 samples=DEFAULT_SAMPLES, burn_in=DEFAULT_BURN_IN,
                 grid_size=DEFAULT_GRID_SIZE, alpha=0.05, sampler='auto',
                 bin_width=DEFAULT_BIN_WIDTH, workers=1, round_output=False):
        marginals = [marginal if isinstance(marginal, MarginalSpec)
                     else MarginalSpec.parse(marginal)
                     for marginal in marginals]
        if int(p) != p or p < 2:
            raise ScenarioError('p must be an integer >= 2 (got {p})'.format(
                p=p
            ))
        if len(marginals) != p:
            msg = 'Scenario has p={p} but {count} marginals'
            raise ScenarioError(msg.format(p=p, count=len(marginals)))
        if int(n) != n or n < 2:
            raise ScenarioError('n must be an integer >= 2 (got {n})'.format(
                n=n
            ))
        if int(runs) != runs or runs < 1:
            msg = 'runs must be a positive integer (got {runs})'
            raise ScenarioError(msg.format(runs=runs))
        if int(workers) != workers or workers < 1:
            msg = 'workers must be a positive integer (got {workers})'
            raise ScenarioError(msg.format(workers=workers))
        if estimator not in ESTIMATORS:
            msg = "Unknown estimator '{estimator}' (expected one of {names})"
            raise ScenarioError(msg.format(
                estimator=estimator, names=', '.join(ESTIMATORS)
            ))
        if sampler not in SAMPLERS:
            msg = "Unknown sampler '{sampler}' (expected one of {names})"
            raise ScenarioError(msg.format(
                sampler=sampler, names=', '.join(SAMPLERS)
            ))
        if not 0.0 < alpha < 1.0:
            raise ScenarioError('alpha must lie in (0, 1)')
        self.p = int(p)
        self.n = int(n)
        self.marginals = marginals
        self.epsilon_total = check_epsilon(epsilon_total, 'epsilon_total')
        self.mechanism = check_mechanism(mechanism)
        self.estimator = estimator
        self.runs = int(runs)
        self.master_seed = master_seed
        self.samples = int(samples)
        self.burn_in = int(burn_in)
        self.grid_size = int(grid_size)
        self.alpha = float(alpha)
        self.sampler = sampler
        self.bin_width = float(bin_width)
        self.workers = int(workers)
        self.round_output = bool(round_output)
        self.check_compatible()

    def check_compatible(self):
        if self.estimator == 'mle' and \
                self.mechanism not in RANGE_PRESERVING:
            msg = ('The mle estimator needs a range-preserving mechanism '
                   '(tgm, btgm or rgm), not {mechanism}')
            raise IncompatibleScenarioError(msg.format(
                mechanism=self.mechanism
            ))
        if self.estimator == 'bayes' and self.mechanism != 'geometric':
            msg = ('The bayes estimator models geometric noise, not '
                   '{mechanism}')
            raise IncompatibleScenarioError(msg.format(
                mechanism=self.mechanism
            ))
        if self.estimator == 'li-kendall' and self.mechanism != 'geometric':
            msg = 'li-kendall adds its own Laplace noise; mechanism {name} \
is not used'
            log.info(msg.format(name=self.mechanism))

    def to_dict(self):
        return {
            'p': self.p,
            'n': self.n,
            'marginals': [str(marginal) for marginal in self.marginals],
            'epsilon_total': self.epsilon_total,
            'mechanism': self.mechanism,
            'estimator': self.estimator,
            'runs': self.runs,
            'master_seed': self.master_seed,
            'samples': self.samples,
            'burn_in': self.burn_in,
            'grid_size': self.grid_size,
            'alpha': self.alpha,
            'sampler': self.sampler,
            'bin_width': self.bin_width,
            'round_output': self.round_output,
        }

    def __repr__(self):
        return '<SimScenario p={p} n={n} {estimator}/{mechanism}>'.format(
            p=self.p, n=self.n, estimator=self.estimator,
            mechanism=self.mechanism
        )


def replicate_seeds(master_seed, runs):
    """Return one integer seed per replicate, spawned from `master_seed`.

    Example:

        >>> replicate_seeds(1, 3) == replicate_seeds(1, 3)
        True
        >>> len(set(replicate_seeds(1, 3)))
        3

    """
    master = np.random.SeedSequence(master_seed)
    if master_seed is None:
        msg = 'No master seed given; using entropy {entropy}'
        log.warning(msg.format(entropy=master.entropy))
    return [int(child.generate_state(1, dtype=np.uint64)[0])
            for child in master.spawn(runs)]


@log_exception(log, 'Replicate {replicate} failed')
def run_replicate(scenario, replicate, seed):
    """Run a single replicate of `scenario` from `seed`.

    :rtype: :class:`~privcorr.core.evaluation.metrics.RunRecord`

    """
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    truth = random_correlation(scenario.p, rng)
    data = sample_copula(truth.entries, scenario.marginals, scenario.n, rng)
    (lower, upper) = (None, None)
    if scenario.estimator == 'li-kendall':
        estimate = li_kendall_baseline(
            data, scenario.epsilon_total, rng
        ).matrix
    else:
        keys = generate_tie_keys(
            scenario.n, scenario.p, seed=int(rng.integers(2 ** 62))
        )
        counts = quadrant_counts(data, keys)
        noisy = privatize_counts(
            counts, PrivacyBudget(scenario.epsilon_total, scenario.p),
            scenario.mechanism, rng, scenario.round_output
        )
        if scenario.estimator == 'mle':
            estimate = mle_matrix(noisy).matrix
        else:
            result = estimate_bayes(
                noisy, scenario.sampler, scenario.samples, scenario.burn_in,
                scenario.grid_size, scenario.alpha, rng, strict=False
            )
            estimate = result.matrix
            (lower, upper) = (result.summary.lower, result.summary.upper)
    runtime = time.perf_counter() - started
    msg = 'Replicate {replicate} finished in {runtime:.2f}s'
    log.debug(msg.format(replicate=replicate, runtime=runtime))
    return RunRecord(
        replicate, truth.entries, np.asarray(estimate), lower, upper,
        runtime, seed, alpha=None if lower is None else scenario.alpha
    )


def _run_all(scenario, seeds):
    if scenario.workers == 1:
        return [run_replicate(scenario=scenario, replicate=index, seed=seed)
                for (index, seed) in enumerate(seeds)]
    with concurrent.futures.ProcessPoolExecutor(
            max_workers=scenario.workers) as executor:
        futures = [
            executor.submit(
                run_replicate, scenario=scenario, replicate=index, seed=seed
            )
            for (index, seed) in enumerate(seeds)
        ]
        return [future.result() for future in futures]


def records_frame(records):
    """Return the per-replicate records as a
    :class:`pandas.DataFrame`, one row per (replicate, pair).

    lo and hi are empty for estimators without intervals.

    """
    rows = []
    for record in sorted(records, key=lambda record: record.replicate):
        (rows_j, rows_jp) = np.triu_indices(record.p, k=1)
        truth = record.truth_pairs()
        estimate = record.estimate_pairs()
        for k in range(truth.size):
            rows.append({
                'replicate': record.replicate,
                'j': int(rows_j[k]),
                'jp': int(rows_jp[k]),
                'truth_r': float(truth[k]),
                'est_r': float(estimate[k]),
                'lo': float(record.lower[k]) if record.has_intervals
                else None,
                'hi': float(record.upper[k]) if record.has_intervals
                else None,
                'seed': record.seed,
            })
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def run_experiment(scenario, report_path=None, records_path=None):
    """Run every replicate of `scenario` and summarize them.

    :param scenario: a :class:`SimScenario`.
    :param string report_path: where to write the report JSON, if given.
    :param string records_path: where to write the records CSV, if given.
    :rtype: :class:`ExperimentResult`

    """
    scenario.check_compatible()
    msg = 'Running {runs} replicate(s) of {scenario} on {workers} worker(s)'
    log.info(msg.format(
        runs=scenario.runs, scenario=scenario, workers=scenario.workers
    ))
    seeds = replicate_seeds(scenario.master_seed, scenario.runs)
    records = sorted(_run_all(scenario, seeds),
                     key=lambda record: record.replicate)
    report = MetricsReport.from_records(
        records, scenario.bin_width, scenario.alpha
    )
    log.info('Finished: {report!r}'.format(report=report))
    if report_path is not None:
        serialization.write_json(report_path, report_document(
            scenario, report
        ))
    if records_path is not None:
        serialization.write_csv(records_path, records_frame(records))
    return ExperimentResult(report, records)


def report_document(scenario, report):
    """The report JSON: the metrics with the scenario echoed back."""
    return {'scenario': scenario.to_dict(), 'metrics': report.to_dict()}
