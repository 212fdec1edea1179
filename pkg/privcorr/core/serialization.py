# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Reading datasets and writing the JSON and CSV artifacts.

JSON documents are written with sorted keys and a trailing newline so that
identical inputs give byte-identical files.

"""

# Standard library imports
import json
import logging

# Third party imports
import pandas as pd

# Local (privcorr) imports
from privcorr.core.errors import DataIOError, ValidationError
from privcorr.core.quadrant_stats import Dataset

log = logging.getLogger(__name__)


class MalformedInputError(ValidationError):
    """Raised when a readable file does not hold the expected content."""
    pass


def read_dataset_csv(path, header=True):
    """Read a numeric CSV file into a
    :class:`~privcorr.core.quadrant_stats.Dataset`.

    :param string path: the CSV file; one record per row.
    :param bool header: whether the first row names the columns.
    :raises DataIOError: if the file cannot be read.
    :raises MalformedInputError: if the file is empty, ragged or holds a
        non-numeric cell.

    """
    try:
        frame = pd.read_csv(path, header=0 if header else None)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        msg = "Cannot parse CSV file '{path}'"
        raise MalformedInputError(msg.format(path=path)) from e
    except (OSError, UnicodeDecodeError) as e:
        msg = "Cannot read CSV file '{path}'"
        raise DataIOError(msg.format(path=path)) from e
    try:
        frame = frame.apply(pd.to_numeric, errors='raise')
    except (TypeError, ValueError) as e:
        msg = "Non-numeric cell in '{path}': {error}"
        raise MalformedInputError(msg.format(path=path, error=e)) from e
    columns = [str(column) for column in frame.columns]
    msg = "Read {n} records of {p} variables from '{path}'"
    log.info(msg.format(n=frame.shape[0], p=frame.shape[1], path=path))
    return Dataset(frame.to_numpy(dtype=float), columns=columns)


def read_json(path):
    """Load a JSON document.

    :raises DataIOError: if the file cannot be read.
    :raises MalformedInputError: if it is not valid JSON.

    """
    try:
        with open(path, encoding='utf-8') as json_file:
            return json.load(json_file)
    except json.JSONDecodeError as e:
        msg = "'{path}' is not valid JSON"
        raise MalformedInputError(msg.format(path=path)) from e
    except (OSError, UnicodeDecodeError) as e:
        msg = "Cannot read '{path}'"
        raise DataIOError(msg.format(path=path)) from e


def dumps(document):
    """Serialize `document` deterministically.

    Example:

        >>> print(dumps({'b': 1, 'a': [0.5, None]}), end='')
        {
          "a": [
            0.5,
            null
          ],
          "b": 1
        }

    """
    return json.dumps(document, indent=2, sort_keys=True,
                      allow_nan=False) + '\n'


def write_json(path, document):
    """Write `document` to `path`.

    :raises DataIOError: if the file cannot be written.

    """
    text = dumps(document)
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as json_file:
            json_file.write(text)
    except OSError as e:
        msg = "Cannot write '{path}'"
        raise DataIOError(msg.format(path=path)) from e
    log.info("Wrote '{path}'".format(path=path))


def write_csv(path, frame):
    """Write a :class:`pandas.DataFrame` without its index.

    :raises DataIOError: if the file cannot be written.

    """
    try:
        frame.to_csv(path, index=False, lineterminator='\n')
    except OSError as e:
        msg = "Cannot write '{path}'"
        raise DataIOError(msg.format(path=path)) from e
    log.info("Wrote '{path}'".format(path=path))
