# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright (C) 2020 Canonical Ltd
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
from typing import Tuple

import numpy as np

from localscore import errors
from localscore.model import ScoreModel, is_irreducible

logger = logging.getLogger(__name__)

# Largest allowed theta * max|f|, in natural-log units.
OVERFLOW_GUARD = 700.0

EIGEN_TOLERANCE = 1e-12
_MAX_POWER_ITERATIONS = 100000


def phi_matrix(model: ScoreModel, theta: float) -> np.ndarray:
    """The score-tilted matrix (p_ab * exp(theta * f(b)))_ab.

    :raises errors.SpectralOverflowError: when theta * max|f| exceeds
                                          the overflow guard.
    """
    if abs(theta) * model.max_abs_score > OVERFLOW_GUARD:
        raise errors.SpectralOverflowError(theta=theta, guard=OVERFLOW_GUARD)
    return model.transition * np.exp(theta * model.scores)[None, :]


def dominant_eigenpair(
    matrix: np.ndarray, *, tolerance: float = EIGEN_TOLERANCE
) -> Tuple[float, np.ndarray]:
    """Return the Perron root rho and its positive right eigenvector u.

    u is normalized so that its entries sum to 1. A dense eigensolve
    provides the starting vector, which power iteration then refines until
    max|Mu - rho u| <= tolerance * max(rho, 1).

    :raises errors.EigenpairConvergenceError: if the matrix is reducible or
                                              the iteration does not settle.
    """
    matrix = np.asarray(matrix, dtype=float)
    if not is_irreducible(matrix):
        raise errors.EigenpairConvergenceError("the matrix is reducible")

    u = _initial_vector(matrix)
    scale = 1.0
    for _ in range(_MAX_POWER_ITERATIONS):
        image = matrix @ u
        rho = image.sum()
        scale = max(rho, 1.0)
        if np.max(np.abs(image - rho * u)) <= tolerance * scale:
            break
        u = image / rho
    else:
        residual = float(np.max(np.abs(matrix @ u - u * (matrix @ u).sum())))
        raise errors.EigenpairConvergenceError(
            "power iteration stopped with residual {:.3e}".format(residual)
        )

    if np.any(u <= 0):
        raise errors.EigenpairConvergenceError(
            "the dominant eigenvector is not positive"
        )
    return float(rho), u


def _initial_vector(matrix: np.ndarray) -> np.ndarray:
    size = matrix.shape[0]
    try:
        values, vectors = np.linalg.eig(matrix)
    except np.linalg.LinAlgError:
        return np.full(size, 1.0 / size)

    guess = np.abs(vectors[:, np.argmax(values.real)].real)
    if not np.all(guess > 0):
        return np.full(size, 1.0 / size)
    return guess / guess.sum()
