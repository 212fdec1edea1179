""" privcorr helpers - base classes module. """

from privcorr.core.helpers.base_classes.application import (
    Application, ApplicationError, ApplicationWithBasicLogging
)

__all__ = ["Application", "ApplicationError", "ApplicationWithBasicLogging"]
