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
import logging
import logging.config
import platform
import sys
from argparse import ArgumentParser

log = logging.getLogger(__name__)

LOGGING_FORMAT = '%(levelname)s: %(name)s: %(message)s'


class ApplicationError(Exception):
    """Base class for application errors."""
    pass


class ApplicationLoggingError(ApplicationError):
    """Raised when a logging configuration file cannot be applied."""
    pass


class Application:
    """A base class for applications. Provides dummy methods for
    handling command line arguments.

    Subclasses can handle command line arguments by overriding
    Application._add_arguments() and Application._handle_arguments()
    which are both called by Application.process_arguments().

    Sample Usage:

        >>> a = Application('A Sample Application')
        >>> a.process_arguments([])
        Namespace()

    """
    def __init__(self, description):
        """
        :param string description: a text description that will be used
            by :meth:`Application.process_arguments()` if an alternative is
            not directly supplied to the method.

        """
        super().__init__()
        self.description = description

    def _add_arguments(self, arg_parser):
        """Add arguments to the argument parser.

        For implementation by subclasses.

        :param arg_parser: the parser to extend.
        :type arg_parser: a :class:`argparse.ArgumentParser` instance.

        """
        pass

    def _handle_arguments(self, args):
        """Handle arguments received from the argument parser.

        For implementation by subclasses.

        :param args: the result of
            :meth:`argparse.ArgumentParser.parse_args()`.
        :type args: :class:`argparse.Namespace`.

        """
        pass

    def process_arguments(self, argv=None, **kwargs):
        """Read in and act upon arguments from the command line.

        :param argv: the argument list; ``sys.argv[1:]`` when None.
        :param kwargs: passed directly to argparse.ArgumentParser's
            constructor.
        :return: the parsed :class:`argparse.Namespace`.

        Customisation of the ArgumentParser is available through the delegate
        methods self._add_arguments and self._handle_arguments.

        """
        if 'description' not in kwargs:
            kwargs['description'] = self.description
        arg_parser = ArgumentParser(**kwargs)
        self._add_arguments(arg_parser)
        args = arg_parser.parse_args(argv)
        self._handle_arguments(args)
        return args

    def start(self):
        """The main execution method for this application.

        :raises NotImplementedError: always.

        """
        raise NotImplementedError

    def stop(self):
        """Termination of the main execution method for this application."""
        pass


class ApplicationWithBasicLogging(Application):
    """A base class for applications that log to stderr with
    logging.basicConfig unless a logging config file is named with
    ``--log-config``.

    ``--verbose`` lowers the stderr threshold from WARNING to INFO.

    """

    def _add_arguments(self, arg_parser):  # Overrides method in superclass
        super()._add_arguments(arg_parser)
        arg_parser.add_argument(
            '--verbose', action='store_true',
            help='log progress messages (INFO level) to stderr'
        )
        arg_parser.add_argument(
            '--log-config', metavar='PATH', default=None,
            help='logging.config file to use instead of stderr logging'
        )

    def _handle_arguments(self, args):     # Overrides method in superclass
        super()._handle_arguments(args)
        self._configure_logging(args.log_config, args.verbose)

    def _configure_logging(self, log_config=None, verbose=False):
        if log_config:
            try:
                logging.config.fileConfig(
                    log_config, disable_existing_loggers=False
                )
            except Exception as e:
                msg = "Failed to initialise logging from '{path}'"
                raise ApplicationLoggingError(
                    msg.format(path=log_config)
                ) from e
        else:
            # Basic config uses a StreamHandler to stderr by default
            level = logging.INFO if verbose else logging.WARNING
            logging.basicConfig(level=level, format=LOGGING_FORMAT)
        logging.captureWarnings(True)
        version_template = "Python version: {version!r}"
        uname_template = "Host details: {uname!r}"
        argv_template = "Command line: {argv!r}"
        log.debug(version_template.format(version=sys.version))
        log.debug(uname_template.format(uname=platform.uname()))
        log.debug(argv_template.format(argv=sys.argv))
