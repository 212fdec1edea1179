# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Nearest correlation matrix in the Frobenius norm.

Alternating projections onto the positive semidefinite cone and onto the
unit-diagonal matrices, with Dykstra's correction applied to the
(non-affine) cone projection so that the iteration converges to the
nearest point of the intersection rather than just to some point in it.

"""

# Standard library imports
import collections
import logging

# Third party imports
import numpy as np

# Local (privcorr) imports
from privcorr.core.errors import DiagnosticError
from privcorr.core.estimation.correlation import (
    CorrelationMatrix, EstimationError, PSD_TOLERANCE
)

log = logging.getLogger(__name__)

CONVERGENCE_TOLERANCE = 1e-8
MAX_ITERATIONS = 10000
# Inputs whose smallest eigenvalue is at least this are already valid.
ALREADY_PSD_TOLERANCE = 1e-12


class ProjectionConvergenceError(DiagnosticError):
    """Raised when the alternating projections do not converge within
    the iteration cap.

    """
    pass


ProjectionResult = collections.namedtuple(
    'ProjectionResult',
    ['matrix', 'was_psd', 'iterations', 'frobenius_adjustment']
)


def _project_psd(matrix):
    (values, vectors) = np.linalg.eigh(matrix)
    return (vectors * np.maximum(values, 0.0)) @ vectors.T


def _project_unit_diagonal(matrix):
    matrix = matrix.copy()
    np.fill_diagonal(matrix, 1.0)
    return matrix


def _rescale_to_unit_diagonal(matrix):
    # Congruence by a positive diagonal keeps a PSD matrix PSD.
    scale = 1.0 / np.sqrt(np.diag(matrix))
    matrix = matrix * np.outer(scale, scale)
    matrix = (matrix + matrix.T) / 2
    np.fill_diagonal(matrix, 1.0)
    return matrix


def nearest_correlation(matrix, tolerance=CONVERGENCE_TOLERANCE,
                        max_iterations=MAX_ITERATIONS):
    """Return the Frobenius-nearest correlation matrix to the symmetric
    unit-diagonal `matrix`.

    A matrix that is already positive semidefinite is returned unchanged.

    :param matrix: a symmetric p x p array with unit diagonal.
    :param float tolerance: stop once successive iterates differ by less
        than this in Frobenius norm.
    :param int max_iterations: the iteration cap.
    :rtype: :class:`ProjectionResult`
    :raises ProjectionConvergenceError: if the cap is reached.

    Example:

        >>> result = nearest_correlation(np.eye(2))
        >>> result.was_psd, result.iterations
        (True, 0)

    """
    original = np.array(matrix, dtype=float)
    if original.ndim != 2 or original.shape[0] != original.shape[1]:
        msg = 'Expected a square matrix (got shape {shape})'
        raise EstimationError(msg.format(shape=original.shape))
    if not np.all(np.isfinite(original)):
        raise EstimationError(
            'Cannot project a matrix with non-finite entries'
        )
    original = (original + original.T) / 2
    if np.linalg.eigvalsh(original).min() >= -ALREADY_PSD_TOLERANCE:
        return ProjectionResult(
            CorrelationMatrix(original), True, 0, 0.0
        )

    current = original.copy()
    correction = np.zeros_like(original)
    for iteration in range(1, max_iterations + 1):
        shifted = current - correction
        cone = _project_psd(shifted)
        correction = cone - shifted
        updated = _project_unit_diagonal(cone)
        step = np.linalg.norm(updated - current, 'fro')
        gap = np.linalg.norm(updated - cone, 'fro')
        current = updated
        if step < tolerance and gap < tolerance:
            break
    else:
        msg = 'Nearest correlation projection did not converge in {count} \
iterations'
        raise ProjectionConvergenceError(msg.format(count=max_iterations))

    if np.linalg.eigvalsh(current).min() < -PSD_TOLERANCE / 10:
        current = _rescale_to_unit_diagonal(_project_psd(current))
    adjustment = float(np.linalg.norm(current - original, 'fro'))
    msg = 'Projected to nearest correlation matrix in {count} iteration(s), \
Frobenius adjustment {adjustment:.6g}'
    log.debug(msg.format(count=iteration, adjustment=adjustment))
    return ProjectionResult(
        CorrelationMatrix(current), False, iteration, adjustment
    )
