# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" privcorr conversions module. """

# Standard library imports
import re


class ConversionError(ValueError):
    """Base class for conversion errors."""
    pass


_compiled_regexp = {}


def _regexp(key, pattern):
    if key not in _compiled_regexp:
        _compiled_regexp[key] = re.compile(pattern)
    return _compiled_regexp[key]


# ----------------------------------------------------------------------
# ---                 NUMBER LISTS ('1, 2.5, 3')                     ---
# ----------------------------------------------------------------------
class FloatListConversionError(ConversionError):
    """Raised when a comma-separated list holds a non-numeric item."""
    pass


def float_list(in_str, separator=','):
    """Convert a separated list of numbers to a list of floats.

    Example:

        >>> float_list('1, 2.5,-3')
        [1.0, 2.5, -3.0]

        >>> float_list('')
        []

        >>> float_list('1, two')
        Traceback (most recent call last):
          ...
        privcorr.core.helpers.conversions.FloatListConversionError: \
could not convert 'two' to a number

    """
    items = [item.strip() for item in in_str.split(separator)]
    if items == ['']:
        return []
    values = []
    for item in items:
        try:
            values.append(float(item))
        except ValueError as e:
            msg = "could not convert '{item}' to a number".format(item=item)
            raise FloatListConversionError(msg) from e
    return values


def semicolon_list(in_str):
    """Split a ';'-separated list, dropping blank entries.

    Example:

        >>> semicolon_list('normal(0, 1); gamma(2, 1);')
        ['normal(0, 1)', 'gamma(2, 1)']

    """
    return [item.strip() for item in in_str.split(';') if item.strip()]


# ----------------------------------------------------------------------
# ---           FUNCTION CALL STRINGS ('family(a, b | c, d)')        ---
# ----------------------------------------------------------------------
#
# Arguments are comma-separated numbers; a '|' splits the argument list
# into groups (used by the discrete family: values | probabilities).
#
_CALL_REGEXP = (
    r'^\s*(?P<name>[A-Za-z_][A-Za-z0-9_-]*)\s*'
    r'\((?P<args>[^()]*)\)\s*$'
)
_CALL_REGEXP_KEY = 'function_call'


class FunctionCallConversionError(ConversionError):
    """Raised when a string is not of the form name(arguments)."""
    pass


def function_call(in_str):
    """Split 'name(a, b | c, d)' into the lower-cased name and a tuple of
    argument groups, each a list of floats.

    Example:

        >>> function_call('Gamma(2, 1)')
        ('gamma', ([2.0, 1.0],))

        >>> function_call('discrete(1, 2 | 0.4, 0.6)')
        ('discrete', ([1.0, 2.0], [0.4, 0.6]))

        >>> function_call('gamma 2 1')
        Traceback (most recent call last):
          ...
        privcorr.core.helpers.conversions.FunctionCallConversionError: \
expected name(arguments), got 'gamma 2 1'

    """
    match = _regexp(_CALL_REGEXP_KEY, _CALL_REGEXP).match(in_str)
    if not match:
        msg = "expected name(arguments), got '{in_str}'".format(in_str=in_str)
        raise FunctionCallConversionError(msg)
    (name, args) = match.group('name', 'args')
    try:
        groups = tuple(float_list(group) for group in args.split('|'))
    except FloatListConversionError as e:
        msg = "bad arguments in '{in_str}': {error}"
        raise FunctionCallConversionError(
            msg.format(in_str=in_str, error=e)
        ) from e
    return (name.lower(), groups)


# ----------------------------------------------------------------------
# ---                 INTEGER TRIPLES ('target,predictor,control')   ---
# ----------------------------------------------------------------------
class IndexTupleConversionError(ConversionError):
    """Raised when an index tuple has the wrong length or bad items."""
    pass


def index_tuple(in_str, length):
    """Convert 'a,b,c' to a tuple of `length` non-negative integers.

    Example:

        >>> index_tuple('0, 1,2', 3)
        (0, 1, 2)

    """
    items = [item.strip() for item in in_str.split(',')]
    if len(items) != length:
        msg = "expected {length} comma-separated indices, got '{in_str}'"
        raise IndexTupleConversionError(
            msg.format(length=length, in_str=in_str)
        )
    try:
        values = tuple(int(item) for item in items)
    except ValueError as e:
        msg = "indices must be integers, got '{in_str}'"
        raise IndexTupleConversionError(msg.format(in_str=in_str)) from e
    if min(values) < 0:
        msg = "indices must be non-negative, got '{in_str}'"
        raise IndexTupleConversionError(msg.format(in_str=in_str))
    return values
