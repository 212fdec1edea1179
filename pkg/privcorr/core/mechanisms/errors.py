# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


# Local (privcorr) imports
from privcorr.core.errors import DiagnosticError, ValidationError


class MechanismError(ValidationError):
    """Base class for privacy mechanism errors."""
    pass


class BudgetError(MechanismError):
    """Raised for a nonpositive or non-finite privacy budget or
    sensitivity, or a budget that does not match the counts it is
    applied to.

    """
    pass


class BoundsError(MechanismError):
    """Raised when a bounded count query has L > U or a true count
    outside [L, U].

    """
    pass


class UnknownMechanismError(MechanismError):
    """Raised when a mechanism name is not one of the registered
    mechanisms.

    """
    pass


class UnboundedSupportError(MechanismError):
    """Raised when an exact output distribution is requested for a
    mechanism whose output support is all of the integers.

    """
    pass


class EpsilonSolveError(DiagnosticError):
    """Raised when the recalibrated budget of the renormalized mechanism
    cannot be bracketed in (0, epsilon].

    """
    pass
