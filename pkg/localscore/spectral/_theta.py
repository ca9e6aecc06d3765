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
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np
from scipy import optimize

from localscore import errors
from localscore.model import ScoreModel, mean_score
from localscore.spectral._perron import OVERFLOW_GUARD, dominant_eigenpair, phi_matrix

logger = logging.getLogger(__name__)

THETA_TOLERANCE = 1e-12
ROOT_TOLERANCE = 1e-10
DERIVATIVE_STEP = 1e-6


@dataclass(frozen=True, eq=False)
class SpectralData:
    """The positive root theta* of rho(theta) = 1 and its eigenvector."""

    model: ScoreModel = field(repr=False)
    theta_star: float
    u_star: np.ndarray = field(repr=False)
    rho_star: float
    eigen_residual: float
    bracket: Tuple[float, float]
    evaluations: int

    def rho(self, theta: float) -> Tuple[float, np.ndarray]:
        """Return (rho(theta), u(theta))."""
        return dominant_eigenpair(phi_matrix(self.model, theta))

    def phi(self, theta: float) -> np.ndarray:
        return phi_matrix(self.model, theta)


def spectral_radius(model: ScoreModel, theta: float) -> float:
    return dominant_eigenpair(phi_matrix(model, theta))[0]


def solve_theta_star(
    model: ScoreModel, *, tolerance: float = THETA_TOLERANCE
) -> SpectralData:
    """Find the unique theta* > 0 with rho(theta*) = 1.

    A bracket [lo, hi] with rho(lo) < 1 <= rho(hi) is grown geometrically
    from a small positive theta, then refined with Brent's bracketed
    bisection/secant method.

    :raises errors.NoRootFoundError: if rho does not drop below 1 next to
                                     zero or the bracket reaches the
                                     overflow guard.
    """
    evaluations = 0

    def rho(theta: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return spectral_radius(model, theta)

    cap = OVERFLOW_GUARD / model.max_abs_score
    lo = min(1e-3 / model.max_abs_score, cap / 2)
    while rho(lo) >= 1.0:
        lo /= 2
        if lo < 1e-12 / model.max_abs_score:
            raise errors.NoRootFoundError(
                "rho(theta) does not drop below 1 for small theta > 0; "
                "the mean score is not negative"
            )

    hi = min(2 * lo, cap)
    while rho(hi) < 1.0:
        if hi >= cap:
            raise errors.NoRootFoundError(
                "rho(theta) stays below 1 up to theta = {:.6g}; no positive "
                "score is reachable often enough".format(cap)
            )
        lo, hi = hi, min(2 * hi, cap)

    logger.debug("theta* bracketed in [{!r}, {!r}]".format(lo, hi))
    theta_star = optimize.brentq(
        lambda t: rho(t) - 1.0, lo, hi, xtol=tolerance, maxiter=500
    )

    rho_star, u_star = dominant_eigenpair(phi_matrix(model, theta_star))
    if abs(rho_star - 1.0) > ROOT_TOLERANCE:
        raise errors.NoRootFoundError(
            "rho(theta*) = {!r} is not within {:.0e} of 1".format(
                rho_star, ROOT_TOLERANCE
            )
        )

    residual = float(
        np.max(np.abs(phi_matrix(model, theta_star) @ u_star - u_star))
    )
    u_star.setflags(write=False)
    logger.debug(
        "theta* = {!r} after {} evaluations (eigen residual {:.2e})".format(
            theta_star, evaluations, residual
        )
    )
    return SpectralData(
        model=model,
        theta_star=float(theta_star),
        u_star=u_star,
        rho_star=rho_star,
        eigen_residual=residual,
        bracket=(lo, hi),
        evaluations=evaluations,
    )


def check_rho_prime_zero(
    model: ScoreModel, *, step: float = DERIVATIVE_STEP
) -> Tuple[float, float]:
    """Compare a central difference of rho at 0 with the mean score.

    :return: (finite difference of rho at 0, mean score)
    """
    lhs = (spectral_radius(model, step) - spectral_radius(model, -step)) / (2 * step)
    return lhs, mean_score(model)


def rho_grid(
    model: ScoreModel, thetas: Sequence[float]
) -> Tuple[np.ndarray, np.ndarray]:
    """Evaluate rho and log rho on a grid of theta values."""
    rho = np.array([spectral_radius(model, t) for t in thetas])
    return rho, np.log(rho)


def log_convexity_defect(
    thetas: Sequence[float], log_rho: Sequence[float]
) -> float:
    """Smallest second divided difference of log rho over the grid.

    log rho is convex, so this is nonnegative up to rounding.
    """
    x = np.asarray(thetas, dtype=float)
    y = np.asarray(log_rho, dtype=float)
    if x.size < 3:
        return 0.0
    slopes = np.diff(y) / np.diff(x)
    return float(np.min(np.diff(slopes) / (x[2:] - x[:-2]) * 2))
