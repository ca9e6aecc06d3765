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
from localscore.ladder._solver import Family
from localscore.model import StatePartition, is_irreducible, stationary_vector
from localscore.spectral import SpectralData

logger = logging.getLogger(__name__)

INVARIANT_TOLERANCE = 1e-10
G_ROW_TOLERANCE = 1e-8


def invariant_vector_z(Q: np.ndarray, partition: StatePartition) -> np.ndarray:
    """Stationary vector of the first-descent chain Q.

    Q only lands on negative-score states, so z lives on those.

    :raises errors.ReducibleRestrictionError: if Q restricted to the
                                              negative states is reducible.
    """
    return _restricted_invariant(Q, partition.negative, "Q", "negative", "z")


def g_matrices(spectral: SpectralData, L_ell: Family) -> Tuple[Family, np.ndarray]:
    """Tilt the first-ascent family by theta* and the eigenvector u.

    G^(l)_ab = u_b / u_a * exp(theta* l d) * L^(l)_ab. Their sum G(inf) is
    stochastic.

    :raises errors.ConsistencyError: if a row of G(inf) is off from 1 by
                                     more than 1e-8.
    """
    u = spectral.u_star
    step = spectral.model.lattice_step
    G_ell = dict()
    for level, matrix in L_ell.items():
        tilted = (matrix * u[None, :] / u[:, None]) * np.exp(
            spectral.theta_star * level * step
        )
        tilted.setflags(write=False)
        G_ell[level] = tilted
    G_inf = sum(G_ell.values())

    deviation = float(np.max(np.abs(G_inf.sum(axis=1) - 1.0)))
    if deviation > G_ROW_TOLERANCE:
        raise errors.ConsistencyError(
            check="G(inf) row sums",
            message="largest deviation from 1 is {:.3e}".format(deviation),
        )
    logger.debug("G(inf) row sums within {:.3e} of 1".format(deviation))
    return G_ell, G_inf


def invariant_vector_w(G_inf: np.ndarray, partition: StatePartition) -> np.ndarray:
    """Stationary vector of G(inf), supported on the positive-score states."""
    return _restricted_invariant(G_inf, partition.positive, "G(inf)", "positive", "w")


def _restricted_invariant(matrix, indices, matrix_name, subset, vector_name):
    restricted = matrix[np.ix_(indices, indices)]
    if not is_irreducible(restricted):
        raise errors.ReducibleRestrictionError(
            matrix=matrix_name, subset=subset, vector=vector_name
        )

    restricted = restricted / restricted.sum(axis=1)[:, None]
    vector = np.zeros(matrix.shape[0])
    vector[indices] = stationary_vector(restricted, tolerance=INVARIANT_TOLERANCE)
    vector.setflags(write=False)
    return vector
