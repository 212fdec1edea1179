# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Simulation scenarios described in Microsoft Windows INI style files.

A scenario file looks like this (see ``samples/`` for complete files)::

    [Scenario]
    p = 2
    n = 500
    epsilon = 1
    mechanism = geometric
    estimator = bayes
    runs = 500
    seed = 20240501
    marginals = gamma(2, 1); normal(0, 1)

    [Sampler]
    samples = 1000
    burnin = 1000
    gridsize = 2001
    alpha = 0.05
    method = auto

    [Evaluation]
    binwidth = 0.4
    workers = 1

Only p, n, epsilon and marginals are required. Relative paths in the
``[Logging]``, ``[RequiredConfig]`` and ``[OptionalConfig]`` sections are
resolved against the directory of the scenario file.

"""

# Standard library imports
import configparser
import logging
import logging.config
import os.path
from functools import wraps

# Local imports
from privcorr.core.errors import DataIOError, ValidationError
from privcorr.core.evaluation.harness import DEFAULT_BIN_WIDTH, SimScenario
from privcorr.core.estimation.bayes import (
    DEFAULT_BURN_IN, DEFAULT_GRID_SIZE, DEFAULT_SAMPLES
)
from privcorr.core.simulation.marginals import parse_marginals

log = logging.getLogger(__name__)

REQUIRED_OPTIONS = ('p', 'n', 'epsilon', 'marginals')


class ConfigError(ValidationError):
    """Base class for configuration errors."""
    pass


class ConfigNotInitialisedError(ConfigError):
    """Raised when a method requiring the config is called prior to the
    config being successfully initialised.

    """
    pass


class ConfigInitialisationError(ConfigError):
    """Raised when the initialise() method of :class:`ScenarioConfig` fails
    to complete correctly.

    """
    pass


class LogInitialisationError(ConfigError):
    """Raised when the initialise() method of :class:`ScenarioConfig` fails
    to process the logging configuration named in the scenario file.

    """
    pass


class ConfigValidationError(ConfigError):
    """Raised when the validate() method of :class:`ScenarioConfig` fails to
    complete correctly.

    """
    pass


class ConfigFileError(DataIOError):
    """Raised when a scenario file cannot be opened or written."""
    pass


class ScenarioConfig(object):
    """Provide a representation of the simulation scenario described in a
    Microsoft Windows INI style config file.

    Sample usage:
        >>> conf = ScenarioConfig()
        >>> conf.read_string('''
        ... [Scenario]
        ... p = 2
        ... n = 100
        ... epsilon = 1
        ... marginals = gamma(2, 1); normal(0, 1)
        ... ''')
        >>> conf.getint('Scenario', 'n')
        100
        >>> conf.scenario().estimator
        'bayes'

    """

    def __init__(self, filename=None):
        """Default constructor - create a new :class:`ScenarioConfig` object.

        :param string filename: an optional pathname of the config file to
            be used to initialise values in this object.

        If a filename is specified the configuration is immediately
        initialised based on the specified ini-style config file.

        """
        self.config = None
        self.filename = None
        if filename:
            self.initialise(filename)

    def _resolve(self, path):
        if self.filename is None or os.path.isabs(path):
            return path
        return os.path.join(os.path.dirname(self.filename), path)

    def _read_file(self, filename, required=True):
        try:
            with open(filename) as configfile:
                self.config.read_file(configfile)
        except Exception as error:
            if required:
                raise error
            msg = 'Failed to read optional file {filename} - {error}'
            log.warning(msg.format(filename=filename, error=error))

    def _initialise_logging(self):
        if not self.config.has_option('Logging', 'ConfigFile'):
            return
        logging_config = self._resolve(self.config.get('Logging',
                                                       'ConfigFile'))
        try:
            logging.config.fileConfig(
                logging_config, disable_existing_loggers=False
            )
            log.debug('Logging initialised')
        except Exception as error:
            msg = 'Failed to initialise log from {path}'
            msg = msg.format(path=logging_config)
            log.exception(msg)
            raise LogInitialisationError(msg) from error

    def initialise(self, filename):
        """Prepare the :class:`ScenarioConfig` object for option retrieval
        based on a specified config file.

        :param string filename: the pathname (absolute or relative to the
            current working directory) of the config file to be opened.
        :raises ConfigFileError: if the file cannot be opened.
        :raises ConfigInitialisationError: if the file cannot be parsed, a
            required include cannot be read, or logging cannot be set up.
        :raises ConfigValidationError: if the scenario is invalid.

        """
        self.config = configparser.ConfigParser()
        self.filename = filename
        try:
            # Load the root config
            self._read_file(filename)
        except OSError as e:
            self.config = None
            msg = 'Cannot open config file: {filename}'
            raise ConfigFileError(msg.format(filename=filename)) from e
        except configparser.Error as e:
            self.config = None
            msg = 'Failed to parse config at path: {filename}'
            raise ConfigInitialisationError(msg.format(filename=filename)) \
                from e
        try:
            # Now we know where the logging should be - let's get logging
            self._initialise_logging()

            # Load any extra config files (required & optional)
            for (label, value) in self._section_items('RequiredConfig'):
                self._read_file(self._resolve(value))
            for (label, value) in self._section_items('OptionalConfig'):
                self._read_file(self._resolve(value), False)
        except Exception as e:
            self.config = None
            msg = 'Failed to read config at path: {filename}'
            msg = msg.format(filename=filename)
            raise ConfigInitialisationError(msg) from e
        self.validate()

    def read_string(self, text):
        """Initialise from a string instead of a file; includes and
        logging configuration are not processed.

        """
        self.config = configparser.ConfigParser()
        try:
            self.config.read_string(text)
        except configparser.Error as e:
            self.config = None
            raise ConfigInitialisationError('Failed to parse config') from e
        self.validate()

    def _section_items(self, section):
        if not self.config.has_section(section):
            return []
        return self.config.items(section)

    def check_config_initialised(fn):
        """A decorator function that ensures a
        :class:`ConfigNotInitialisedError` will be raised if the decorated
        method is called prior to successful config initialisation.

        :param function fn: the function to be decorated.
        :raises ConfigNotInitialisedError: raised if self.config has
            not been been successfully intialised.

        """
        @wraps(fn)
        def check(*args, **kwargs):
            _self = args[0]
            if not _self.config:
                raise ConfigNotInitialisedError()
            return fn(*args, **kwargs)
        return check

    @check_config_initialised
    def validate(self):
        """Check that the required options are present and that they
        describe a valid :class:`~privcorr.core.evaluation.SimScenario`.

        :raises ConfigValidationError: for a missing option or an invalid
            scenario.

        """
        if not self.config.has_section('Scenario'):
            raise ConfigValidationError('Missing [Scenario] section')
        missing = [option for option in REQUIRED_OPTIONS
                   if not self.config.has_option('Scenario', option)]
        if missing:
            msg = 'Missing [Scenario] option(s): {options}'
            raise ConfigValidationError(msg.format(
                options=', '.join(missing)
            ))
        try:
            self.scenario()
        except (ValidationError, ValueError) as e:
            msg = 'Invalid scenario: {error}'
            raise ConfigValidationError(msg.format(error=e)) from e

    @check_config_initialised
    def getfloat(self, *args, **kwargs):
        """A convenience method which coerces the configparser option in the
        specified section to a floating point number. This method
        will also convert a percentage value (e.g. 5%) to the corresponding
        floating point value (e.g. 0.05).

        """
        try:
            return self.config.getfloat(*args, **kwargs)
        except ValueError:
            str_val = self.config.get(*args, **kwargs)
            if str_val.strip()[-1:] == '%':
                return float(str_val.strip()[:-1]) / 100
            raise

    @check_config_initialised
    def getint(self, *args, **kwargs):
        return self.config.getint(*args, **kwargs)

    @check_config_initialised
    def get(self, *args, **kwargs):
        return self.config.get(*args, **kwargs)

    @check_config_initialised
    def scenario(self, seed=None, workers=None):
        """Build the :class:`~privcorr.core.evaluation.SimScenario`.

        :param seed: overrides the [Scenario] seed when not None.
        :param workers: overrides [Evaluation] workers when not None.

        """
        master_seed = self.getint('Scenario', 'seed', fallback=None)
        if seed is not None:
            master_seed = seed
        if workers is None:
            workers = self.getint('Evaluation', 'workers', fallback=1)
        return SimScenario(
            p=self.getint('Scenario', 'p'),
            n=self.getint('Scenario', 'n'),
            marginals=parse_marginals(self.get('Scenario', 'marginals')),
            epsilon_total=self.getfloat('Scenario', 'epsilon'),
            mechanism=self.get('Scenario', 'mechanism',
                               fallback='geometric'),
            estimator=self.get('Scenario', 'estimator', fallback='bayes'),
            runs=self.getint('Scenario', 'runs', fallback=500),
            master_seed=master_seed,
            samples=self.getint('Sampler', 'samples',
                                fallback=DEFAULT_SAMPLES),
            burn_in=self.getint('Sampler', 'burnin',
                                fallback=DEFAULT_BURN_IN),
            grid_size=self.getint('Sampler', 'gridsize',
                                  fallback=DEFAULT_GRID_SIZE),
            alpha=self.getfloat('Sampler', 'alpha', fallback=0.05),
            sampler=self.get('Sampler', 'method', fallback='auto'),
            bin_width=self.getfloat('Evaluation', 'binwidth',
                                    fallback=DEFAULT_BIN_WIDTH),
            workers=workers,
            round_output=self.config.getboolean('Scenario', 'round',
                                                fallback=False),
        )

    @check_config_initialised
    def __getattr__(self, name):
        if hasattr(self.config, name):
            return getattr(self.config, name)
        else:
            raise NameError('Name \'{name}\' is not defined'.format(name=name))
