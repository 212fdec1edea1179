# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" The privcorr command line.

Exit codes: 0 success, 2 invalid input or flags, 3 unreadable or
unwritable files, 4 failed diagnostics (sampler, projection or DP check).

"""

# Standard library imports
import logging
import sys

# Local (privcorr) imports
from privcorr import __shortdescription__
from privcorr.cli.commands import COMMANDS, CliConfig, add_subcommands
from privcorr.core.errors import (
    EXIT_IO, EXIT_SUCCESS, PrivcorrError, exit_code_for
)
from privcorr.core.helpers.base_classes import ApplicationWithBasicLogging
from privcorr.core.helpers.base_classes.application import (
    ApplicationLoggingError
)

log = logging.getLogger(__name__)


class Privcorr(ApplicationWithBasicLogging):
    """The privcorr application: one sub-command per operation."""

    def __init__(self, description=__shortdescription__):
        self.config = None
        super().__init__(description)

    def _add_arguments(self, arg_parser):  # Overrides method in superclass
        super()._add_arguments(arg_parser)
        add_subcommands(arg_parser)

    def _handle_arguments(self, args):     # Overrides method in superclass
        super()._handle_arguments(args)
        self.config = CliConfig.from_args(args)

    def start(self):
        msg = 'Running {command}'
        log.info(msg.format(command=self.config.command))
        return COMMANDS[self.config.command](self.config)


def main(argv=None):
    """Run the command line and return the process exit code."""
    application = Privcorr()
    try:
        application.process_arguments(argv, prog='privcorr')
        application.start()
    except ApplicationLoggingError as e:
        sys.stderr.write('privcorr: {error}\n'.format(error=e))
        return EXIT_IO
    except PrivcorrError as e:
        log.debug('Command failed', exc_info=True)
        sys.stderr.write('privcorr: {error}\n'.format(error=e))
        return exit_code_for(e)
    finally:
        application.stop()
    return EXIT_SUCCESS


__all__ = ["Privcorr", "main"]
