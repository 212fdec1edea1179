""" privcorr helpers module. """

__all__ = ["base_classes", "conversions", "decorators"]
