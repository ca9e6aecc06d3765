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
import math
from functools import reduce

import numpy as np
from scipy.sparse import csgraph, csr_matrix

from localscore import errors

logger = logging.getLogger(__name__)

STATIONARY_TOLERANCE = 1e-12
_POWER_ITERATIONS = 100000


def is_irreducible(matrix: np.ndarray) -> bool:
    """Return True if the nonzero pattern of matrix is strongly connected."""
    pattern = (np.asarray(matrix) > 0).astype(float)
    n_components = csgraph.connected_components(
        csr_matrix(pattern), directed=True, connection="strong", return_labels=False
    )
    return n_components == 1


def period(matrix: np.ndarray) -> int:
    """Return the period of an irreducible nonnegative matrix.

    The period is the gcd of cycle lengths, obtained from breadth-first
    levels as the gcd of level[i] + 1 - level[j] over all edges i -> j.
    """
    pattern = np.asarray(matrix) > 0
    levels = csgraph.shortest_path(
        csr_matrix(pattern.astype(float)), directed=True, unweighted=True, indices=0
    )
    rows, cols = np.nonzero(pattern)
    gaps = [
        abs(int(levels[i] + 1 - levels[j]))
        for i, j in zip(rows, cols)
        if np.isfinite(levels[i]) and np.isfinite(levels[j])
    ]
    return reduce(math.gcd, gaps, 0)


def stationary_vector(
    matrix: np.ndarray, *, tolerance: float = STATIONARY_TOLERANCE
) -> np.ndarray:
    """Compute the invariant probability vector of a stochastic matrix.

    A dense solve of (M^T - I) pi = 0 with one equation replaced by the
    normalization is tried first; power iteration is the fallback.

    :raises errors.StationaryConvergenceError: if neither reaches tolerance.
    """
    matrix = np.asarray(matrix, dtype=float)
    size = matrix.shape[0]

    system = matrix.T - np.eye(size)
    system[-1, :] = 1.0
    rhs = np.zeros(size)
    rhs[-1] = 1.0
    try:
        pi = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError:
        logger.debug("Singular stationary system, falling back to power iteration")
        pi = np.full(size, 1.0 / size)
    else:
        residual = _residual(matrix, pi)
        if residual <= tolerance and np.all(pi > 0):
            return pi
        logger.debug(
            "Direct stationary solve left residual {:.3e}, "
            "refining with power iteration".format(residual)
        )
        pi = np.clip(pi, 0.0, None)
        pi = pi / pi.sum() if pi.sum() > 0 else np.full(size, 1.0 / size)

    pi = power_iteration(matrix, pi, tolerance=tolerance)
    residual = _residual(matrix, pi)
    if residual > tolerance:
        raise errors.StationaryConvergenceError(
            residual=residual, tolerance=tolerance
        )
    return pi


def power_iteration(
    matrix: np.ndarray, start: np.ndarray, *, tolerance: float = STATIONARY_TOLERANCE
) -> np.ndarray:
    pi = np.asarray(start, dtype=float)
    for _ in range(_POWER_ITERATIONS):
        updated = pi @ matrix
        updated /= updated.sum()
        if np.max(np.abs(updated - pi)) <= tolerance / 10:
            return updated
        pi = updated
    return pi


def _residual(matrix: np.ndarray, pi: np.ndarray) -> float:
    return float(np.max(np.abs(pi @ matrix - pi)))


def stationary_distribution(model) -> np.ndarray:
    """The stationary frequency vector pi of the model's chain."""
    return stationary_vector(model.transition)


def mean_score(model) -> float:
    """The average score sum_a f(a) pi_a, in original score units."""
    return float(model.scores @ stationary_distribution(model))
