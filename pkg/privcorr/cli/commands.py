# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" The privcorr commands.

Each command takes a :class:`CliConfig` and writes its artifact. Outputs
never contain raw data: privatized files hold noisy counts and public
metadata (n, p, epsilon, mechanism) only.

"""

# Standard library imports
import logging
import math
import sys

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core import serialization
from privcorr.core.config import ConfigFileError, ScenarioConfig
from privcorr.core.config.create_config import ScenarioConfigCreator
from privcorr.core.errors import DiagnosticError, ValidationError
from privcorr.core.estimation import (
    SamplerDiagnosticError, conditional_regression_coef, estimate_bayes,
    mle_matrix
)
from privcorr.core.estimation.bayes import (
    DEFAULT_BURN_IN, DEFAULT_GRID_SIZE, DEFAULT_SAMPLES, SAMPLERS
)
from privcorr.core.evaluation import run_experiment
from privcorr.core.helpers import conversions
from privcorr.core.mechanisms import (
    MECHANISMS, RANGE_PRESERVING, NoisyCountSet, PrivacyBudget,
    check_epsilon, output_distribution, privatize_counts,
    solve_epsilon_prime, verify_dp_ratio
)
from privcorr.core.quadrant_stats import generate_tie_keys, quadrant_counts

log = logging.getLogger(__name__)

# Slack allowed on top of epsilon when checking a measured privacy loss.
DP_RATIO_TOLERANCE = 1e-9

REQUIRED_FIELDS = {
    'privatize': ('input', 'output', 'epsilon'),
    'estimate-mle': ('input', 'output'),
    'estimate-bayes': ('input', 'output'),
    'simulate': ('config', 'output'),
    'verify-dp': ('mechanism', 'epsilon', 'lower', 'upper'),
    'mechanism-pmf': ('count', 'epsilon', 'lower', 'upper'),
    'create-config': ('output',),
}


class CliConfigError(ValidationError):
    """Raised when a command is missing a required flag or a flag value
    is out of range.

    """
    pass


class CliConfig(object):
    """The validated settings of one command invocation.

    :param string command: the command name.
    :param kwargs: the flag values; unknown names are ignored and missing
        ones default to None.
    :raises CliConfigError: if a field the command needs is missing or
        invalid.

    Example:

        >>> config = CliConfig('privatize', input='data.csv',
        ...                    output='counts.json', epsilon=1.0)
        >>> config.mechanism, config.seed
        ('geometric', None)
        >>> CliConfig('estimate-mle', input='counts.json')
        Traceback (most recent call last):
          ...
        privcorr.cli.commands.CliConfigError: \
estimate-mle needs --output

    """

    FIELDS = {
        'input': None,
        'output': None,
        'epsilon': None,
        'mechanism': None,
        'seed': None,
        'samples': DEFAULT_SAMPLES,
        'burnin': DEFAULT_BURN_IN,
        'grid_size': DEFAULT_GRID_SIZE,
        'alpha': 0.05,
        'config': None,
        'sampler': 'auto',
        'regression': (),
        'round_output': False,
        'lower': None,
        'upper': None,
        'delta': 1.0,
        'count': None,
        'workers': None,
        'records': None,
        'no_header': False,
    }

    def __init__(self, command, **kwargs):
        if command not in COMMANDS:
            msg = "Unknown command '{command}'"
            raise CliConfigError(msg.format(command=command))
        self.command = command
        for (name, default) in self.FIELDS.items():
            value = kwargs.get(name)
            setattr(self, name, default if value is None else value)
        if self.mechanism is None and command == 'privatize':
            self.mechanism = 'geometric'
        self.validate()

    @classmethod
    def from_args(cls, args):
        fields = vars(args).copy()
        return cls(fields.pop('command'), **fields)

    def validate(self):
        for name in REQUIRED_FIELDS[self.command]:
            if getattr(self, name) is None:
                msg = '{command} needs --{flag}'
                raise CliConfigError(msg.format(
                    command=self.command, flag=name.replace('_', '-')
                ))
        if self.epsilon is not None:
            check_epsilon(self.epsilon, 'epsilon')
        check_epsilon(self.delta, 'delta')
        if self.mechanism is not None and self.mechanism not in MECHANISMS:
            msg = "Unknown mechanism '{name}'"
            raise CliConfigError(msg.format(name=self.mechanism))
        if self.sampler not in SAMPLERS:
            msg = "Unknown sampler '{name}'"
            raise CliConfigError(msg.format(name=self.sampler))
        if not 0.0 < self.alpha < 1.0:
            msg = '--alpha must lie in (0, 1) (got {alpha})'
            raise CliConfigError(msg.format(alpha=self.alpha))
        if self.samples < 1 or self.burnin < 0:
            raise CliConfigError('--samples must be >= 1 and --burnin >= 0')
        try:
            self.regression = [conversions.index_tuple(spec, 3)
                               for spec in self.regression]
        except conversions.ConversionError as e:
            raise CliConfigError(str(e)) from e
        if self.lower is not None and self.upper is not None and \
                self.lower > self.upper:
            msg = '--lower {lower} exceeds --upper {upper}'
            raise CliConfigError(msg.format(
                lower=self.lower, upper=self.upper
            ))

    def __repr__(self):
        return '<CliConfig {command}>'.format(command=self.command)


def _emit(config, document):
    if config.output is None:
        sys.stdout.write(serialization.dumps(document))
    else:
        serialization.write_json(config.output, document)


def _read_noisy(path):
    return NoisyCountSet.from_dict(serialization.read_json(path))


def privatize_cmd(config):
    """Read a CSV dataset and write its privatized quadrant counts.

    Tie keys and mechanism noise come from independent streams spawned
    from --seed.

    """
    if config.seed is None:
        log.warning('No --seed given; the release is not reproducible')
    (key_seed, noise_seed) = np.random.SeedSequence(config.seed).spawn(2)
    data = serialization.read_dataset_csv(
        config.input, header=not config.no_header
    )
    keys = generate_tie_keys(
        data.n, data.p,
        seed=int(key_seed.generate_state(1, dtype=np.uint64)[0])
    )
    counts = quadrant_counts(data, keys)
    noisy = privatize_counts(
        counts, PrivacyBudget(config.epsilon, data.p), config.mechanism,
        np.random.default_rng(noise_seed), config.round_output
    )
    serialization.write_json(config.output, noisy.to_dict())
    return noisy


def _header(noisy):
    return {
        'n': noisy.n,
        'p': noisy.p,
        'mechanism': noisy.mechanism,
        'epsilon_total': noisy.budget.epsilon_total,
        'epsilon_pair': noisy.epsilon_pair,
    }


def estimate_mle_cmd(config):
    """Write the noise-naive MLE of R with its projection diagnostics."""
    noisy = _read_noisy(config.input)
    result = mle_matrix(noisy)
    document = _header(noisy)
    document.update({
        'estimator': 'mle',
        'matrix': result.matrix.to_list(),
        'pairwise': [
            {'j': j, 'jp': jp, 'r': float(r)}
            for ((j, jp), r) in zip(noisy.pairs(), result.pairwise)
        ],
        'projection': {
            'was_psd': result.projection.was_psd,
            'iterations': result.projection.iterations,
            'frobenius_adjustment': result.projection.frobenius_adjustment,
        },
    })
    serialization.write_json(config.output, document)
    return result


def estimate_bayes_cmd(config):
    """Write the posterior mean of R, per-pair intervals and sampler
    diagnostics, plus any requested regression coefficient summaries.

    :raises SamplerDiagnosticError: after writing the report, if the
        sampler diagnostics were flagged.

    """
    noisy = _read_noisy(config.input)
    if config.seed is None:
        log.warning('No --seed given; the posterior draws are not \
reproducible')
    rng = np.random.default_rng(config.seed)
    result = estimate_bayes(
        noisy, config.sampler, config.samples, config.burnin,
        config.grid_size, config.alpha, rng, strict=False
    )
    diagnostics = dict(result.draws.diagnostics)
    document = _header(noisy)
    document.update({
        'estimator': 'bayes',
        'matrix': result.matrix.to_list(),
        'summary': result.summary.to_dict(),
        'monte_carlo_se':
            result.draws.monte_carlo_standard_errors().tolist(),
        'samples': len(result.draws),
        'burn_in': result.draws.burn_in,
        'diagnostics': diagnostics,
        'regression': [
            conditional_regression_coef(
                result.draws, target, predictor, control, config.alpha
            )._asdict()
            for (target, predictor, control) in config.regression
        ],
    })
    serialization.write_json(config.output, document)
    if diagnostics.get('flagged'):
        msg = 'Sampler diagnostics flagged (acceptance rate {rate:.3f}); \
report written to {path}'
        raise SamplerDiagnosticError(msg.format(
            rate=diagnostics['acceptance_rate'], path=config.output
        ))
    return result


def simulate_cmd(config):
    """Run the scenario in --config and write the report JSON to --output
    and, with --records, the per-replicate CSV.

    """
    scenario = ScenarioConfig(config.config).scenario(
        seed=config.seed, workers=config.workers
    )
    return run_experiment(scenario, config.output, config.records)


def create_config_cmd(config):
    """Write a sample scenario configuration to --output, replacing any
    existing file.

    :raises ConfigFileError: if --output cannot be written.

    """
    try:
        ScenarioConfigCreator().create_config(config.output)
    except OSError as e:
        msg = 'Cannot write scenario configuration {path}: {error}'
        raise ConfigFileError(msg.format(path=config.output, error=e)) from e
    log.info('Wrote sample scenario to {path}'.format(path=config.output))
    return config.output


def verify_dp_cmd(config):
    """Measure the worst-case privacy loss of --mechanism on
    [--lower, --upper].

    :raises DiagnosticError: after writing the report, if the loss
        exceeds --epsilon.

    """
    loss = verify_dp_ratio(
        config.mechanism, config.lower, config.upper, config.delta,
        config.epsilon, config.round_output
    )
    satisfied = loss <= config.epsilon + DP_RATIO_TOLERANCE
    _emit(config, {
        'mechanism': config.mechanism,
        'lower': config.lower,
        'upper': config.upper,
        'delta': config.delta,
        'epsilon': config.epsilon,
        'round_output': config.round_output,
        'max_privacy_loss': loss if math.isfinite(loss) else 'inf',
        'satisfied': satisfied,
    })
    if not satisfied:
        msg = '{mechanism} privacy loss {loss} exceeds epsilon {epsilon}'
        raise DiagnosticError(msg.format(
            mechanism=config.mechanism, loss=loss, epsilon=config.epsilon
        ))
    return loss


def mechanism_pmf_cmd(config):
    """Write the exact output distributions of the range-preserving
    mechanisms (or just --mechanism) for the true count --count.

    """
    names = sorted(RANGE_PRESERVING) if config.mechanism is None \
        else [config.mechanism]
    mechanisms = {}
    for name in names:
        distribution = output_distribution(
            name, config.count, config.lower, config.upper, config.epsilon,
            config.delta, config.round_output
        )
        mechanisms[name] = [
            {'value': float(value), 'probability': float(np.exp(log_p))}
            for (value, log_p) in zip(
                distribution.values, distribution.log_probabilities
            )
        ]
    document = {
        'count': config.count,
        'lower': config.lower,
        'upper': config.upper,
        'epsilon': config.epsilon,
        'delta': config.delta,
        'mechanisms': mechanisms,
    }
    if 'rgm' in names:
        document['rgm_epsilon_prime'] = solve_epsilon_prime(
            config.epsilon, config.lower, config.upper, config.delta
        )
    _emit(config, document)
    return document


COMMANDS = {
    'privatize': privatize_cmd,
    'estimate-mle': estimate_mle_cmd,
    'estimate-bayes': estimate_bayes_cmd,
    'simulate': simulate_cmd,
    'verify-dp': verify_dp_cmd,
    'mechanism-pmf': mechanism_pmf_cmd,
    'create-config': create_config_cmd,
}


def add_subcommands(arg_parser):
    """Add one sub-parser per command to `arg_parser`."""
    subparsers = arg_parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    def add(name, help_text):
        return subparsers.add_parser(name, help=help_text,
                                     description=help_text)

    def seed(parser):
        parser.add_argument('--seed', type=int,
                            help='seed for reproducible output')

    def epsilon(parser, required=True):
        parser.add_argument('--epsilon', type=float, required=required,
                            help='total privacy budget')

    def io(parser, input_help, output_help):
        parser.add_argument('--input', required=True, help=input_help)
        parser.add_argument('--output', required=True, help=output_help)

    def bounds(parser):
        parser.add_argument('--lower', type=int, required=True,
                            help='public lower bound L of the count')
        parser.add_argument('--upper', type=int, required=True,
                            help='public upper bound U of the count')
        parser.add_argument('--delta', type=float, default=1.0,
                            help='l1 sensitivity (default: 1)')
        parser.add_argument('--round', dest='round_output',
                            action='store_true',
                            help='round btgm releases to integers')

    parser = add('privatize', 'privatize the quadrant counts of a CSV file')
    io(parser, 'numeric CSV dataset', 'noisy count JSON to write')
    epsilon(parser)
    parser.add_argument('--mechanism', choices=sorted(MECHANISMS),
                        default='geometric', help='release mechanism')
    parser.add_argument('--round', dest='round_output', action='store_true',
                        help='round btgm releases to integers')
    parser.add_argument('--no-header', action='store_true',
                        help='the CSV file has no header row')
    seed(parser)

    parser = add('estimate-mle',
                 'noise-naive MLE from range-preserving noisy counts')
    io(parser, 'noisy count JSON', 'estimate JSON to write')

    parser = add('estimate-bayes',
                 'noise-aware posterior from geometric noisy counts')
    io(parser, 'noisy count JSON', 'estimate JSON to write')
    parser.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                        help='posterior draws kept')
    parser.add_argument('--burnin', type=int, default=DEFAULT_BURN_IN,
                        help='Metropolis iterations discarded')
    parser.add_argument('--grid-size', type=int, default=DEFAULT_GRID_SIZE,
                        help='grid cells for the p = 2 posterior')
    parser.add_argument('--alpha', type=float, default=0.05,
                        help='intervals at alpha/2 and 1 - alpha/2')
    parser.add_argument('--sampler', choices=SAMPLERS, default='auto',
                        help='auto uses the grid when p = 2')
    parser.add_argument('--regression', action='append', default=[],
                        metavar='TARGET,PREDICTOR,CONTROL',
                        help='summarize a conditional regression '
                             'coefficient (repeatable)')
    seed(parser)

    parser = add('simulate', 'run a simulation scenario')
    parser.add_argument('--config', required=True,
                        help='scenario configuration file')
    parser.add_argument('--output', required=True,
                        help='metrics report JSON to write')
    parser.add_argument('--records',
                        help='per-replicate records CSV to write')
    parser.add_argument('--workers', type=int,
                        help='worker processes (overrides the scenario)')
    seed(parser)

    parser = add('create-config', 'write a sample scenario configuration')
    parser.add_argument('--output', required=True,
                        help='scenario configuration file to write')

    parser = add('verify-dp',
                 'measure the worst-case privacy loss of a mechanism')
    parser.add_argument('--mechanism', choices=sorted(MECHANISMS),
                        required=True, help='mechanism to check')
    epsilon(parser)
    bounds(parser)
    parser.add_argument('--output', help='report JSON (default: stdout)')

    parser = add('mechanism-pmf',
                 'exact output distributions of the range-preserving '
                 'mechanisms')
    parser.add_argument('--count', type=int, required=True,
                        help='the true count M')
    parser.add_argument('--mechanism', choices=sorted(RANGE_PRESERVING),
                        help='one mechanism (default: all three)')
    epsilon(parser)
    bounds(parser)
    parser.add_argument('--output', help='report JSON (default: stdout)')
    return subparsers
