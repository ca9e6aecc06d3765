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
from typing import Tuple

import numpy as np

from localscore import errors
from localscore.ladder._solver import Family
from localscore.model import ScoreModel
from localscore.spectral import SpectralData

logger = logging.getLogger(__name__)

C_INF_AGREEMENT = 1e-10
C_INF_TOLERANCE = 1e-8

_SIMPLE_SCORES = frozenset((-1, 0, 1))


def constant_c(spectral: SpectralData, w: np.ndarray, L_ell: Family) -> float:
    """The mean tilted ascent height.

    c = sum_l l d exp(theta* l d) (w/u) L^(l) u, summed over the finitely
    many nonzero L^(l).
    """
    u = spectral.u_star
    step = spectral.model.lattice_step
    weights = w / u
    return float(
        sum(
            level * step * math.exp(spectral.theta_star * level * step)
            * (weights @ matrix @ u)
            for level, matrix in L_ell.items()
        )
    )


def c_infinity(
    spectral: SpectralData,
    w: np.ndarray,
    L_ell: Family,
    L_inf: np.ndarray,
    *,
    c: float = None
) -> float:
    """Limit of exp(theta* k d) P_a(S+ > kd) / u_a as k grows."""
    return c_infinity_forms(spectral, w, L_ell, L_inf, c=c)[0]


def c_infinity_forms(
    spectral: SpectralData,
    w: np.ndarray,
    L_ell: Family,
    L_inf: np.ndarray,
    *,
    c: float = None
) -> Tuple[float, float]:
    """Evaluate c(inf) in two closed forms.

    The primary form is a finite sum over the partial ascent masses
    L_a(inf) - L_a(l); the second sums by parts over
    E_a[exp(theta* S_ascent); ascent < inf].

    :return: (primary value, summation-by-parts value)
    :raises errors.ConsistencyError: if the two forms differ by more than
                                     1e-8 relative.
    """
    if c is None:
        c = constant_c(spectral, w, L_ell)
    theta = spectral.theta_star
    step = spectral.model.lattice_step
    weights = w / spectral.u_star
    v_max = max(L_ell)

    masses = {level: matrix.sum(axis=1) for level, matrix in L_ell.items()}
    partial = np.zeros_like(L_inf)
    primary_sum = np.zeros_like(L_inf)
    for level in range(v_max):
        partial = partial + masses.get(level, 0.0)
        primary_sum += (L_inf - partial) * math.exp(theta * level * step)
    primary = step / c * float(weights @ primary_sum)

    tilted_mass = sum(
        mass * math.exp(theta * level * step) for level, mass in masses.items()
    )
    alternate = (
        step
        / (c * math.expm1(theta * step))
        * float(weights @ (tilted_mass - L_inf))
    )

    disagreement = abs(primary - alternate) / abs(primary)
    if disagreement > C_INF_TOLERANCE:
        raise errors.ConsistencyError(
            check="c(inf) closed forms",
            message="{!r} and {!r} differ by {:.3e} relative".format(
                primary, alternate, disagreement
            ),
        )
    if disagreement > C_INF_AGREEMENT:
        logger.warning(
            "The two c(inf) forms differ by {:.3e} relative".format(disagreement)
        )
    return primary, alternate


def expected_descent(model: ScoreModel, Q_ell: Family) -> np.ndarray:
    """E_b(S at the first descent), in score units, for every start state b."""
    step = model.lattice_step
    return sum(level * step * matrix.sum(axis=1) for level, matrix in Q_ell.items())


def a_star(
    model: ScoreModel, z: np.ndarray, Q_ell: Family, *, mean: float
) -> float:
    """Mean spacing between successive ladder epochs.

    A* = sum_b z_b E_b(S at the first descent) / E f(A).
    """
    value = float(z @ expected_descent(model, Q_ell)) / mean
    if value < 1.0:
        logger.warning(
            "A* = {!r} is below 1; the ladder solution is inaccurate".format(value)
        )
    return value


def karlin_dembo_constant(
    model: ScoreModel,
    spectral: SpectralData,
    z: np.ndarray,
    w: np.ndarray,
    *,
    mean: float
) -> float:
    """The Gumbel scale K* for scores in {-1, 0, 1}.

    K* = (exp(-theta*) - exp(-2 theta*)) * (-E f) * (z . u) * sum(w / u).

    :raises errors.UnsupportedModelError: for any other scoring scheme.
    """
    if not set(model.scores.tolist()) <= _SIMPLE_SCORES:
        raise errors.UnsupportedModelError(
            feature="Karlin-Dembo approximation", scores=model.scores.tolist()
        )
    theta = spectral.theta_star
    u = spectral.u_star
    return float(
        (math.exp(-theta) - math.exp(-2 * theta))
        * (-mean)
        * float(z @ u)
        * float(np.sum(w / u))
    )
