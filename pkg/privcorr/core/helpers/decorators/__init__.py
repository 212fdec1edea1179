""" privcorr helpers - decorators module. """

from privcorr.core.helpers.decorators.log_exception import log_exception

__all__ = ["log_exception"]
