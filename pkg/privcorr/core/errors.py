# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Exceptions shared across privcorr.

Every failure raised by the package derives from :class:`PrivcorrError`.
The three direct subclasses partition failures by how a caller should
react to them and map onto the command line exit codes (see
:data:`EXIT_CODES`).

"""


class PrivcorrError(Exception):
    """Base class for privcorr errors."""
    pass


class ValidationError(PrivcorrError, ValueError):
    """Raised when an input value, shape or combination of options is not
    acceptable (e.g. a nonpositive privacy budget or a count outside its
    bounds).

    """
    pass


class DataIOError(PrivcorrError, OSError):
    """Raised when a file cannot be read or written."""
    pass


class DiagnosticError(PrivcorrError, RuntimeError):
    """Raised when a numerical procedure runs to completion but its own
    diagnostics show the result cannot be trusted (e.g. a sampler whose
    acceptance rate collapsed, or a projection that failed to converge).

    """
    pass


EXIT_SUCCESS = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_DIAGNOSTIC = 4

EXIT_CODES = {
    ValidationError: EXIT_VALIDATION,
    DataIOError: EXIT_IO,
    DiagnosticError: EXIT_DIAGNOSTIC,
}


def exit_code_for(error):
    """Return the process exit code associated with `error`.

    :param Exception error: the exception that terminated a command.
    :rtype: int

    Example:

        >>> exit_code_for(ValidationError('bad epsilon'))
        2
        >>> exit_code_for(DataIOError('missing file'))
        3
        >>> exit_code_for(DiagnosticError('acceptance collapsed'))
        4

    """
    for (error_class, code) in EXIT_CODES.items():
        if isinstance(error, error_class):
            return code
    return 1
