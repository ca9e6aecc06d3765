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
from typing import NamedTuple, Sequence

import numpy as np

from localscore import errors
from localscore.distributions._splus import survival_function
from localscore.distributions._table import DistributionTable, Statistic
from localscore.ladder import LadderSystem
from localscore.model import ScoreModel
from localscore.spectral import SpectralData

logger = logging.getLogger(__name__)

VARIANTS = ("statement", "proof")


class _MnPoint(NamedTuple):
    value: float
    clamped: bool
    floored: bool


def mn_level(ladders: LadderSystem, n: int, x: float) -> int:
    """Lattice index floor((log(n) / theta* + x) / d); may be negative."""
    y = math.log(n) / ladders.theta_star + x
    return math.floor(y / ladders.lattice_step)


def mn_cdf_approx(
    model: ScoreModel,
    ladders: LadderSystem,
    exact_splus: DistributionTable,
    n: int,
    x: float,
    *,
    variant: str = "statement",
    tail: str = "exact"
) -> np.ndarray:
    """Approximate P_a(Mn <= log(n)/theta* + x) for every start state a.

    The value is

        exp(-(n/A*) sum_b z_b P_b(S+ > m))
        * exp((n/A*) sum_{l<0} sum_g P_g(S+ > m - l) sum_b z_b Q^(l)_bg)

    with m the floored level, and does not depend on a. The ``proof``
    variant drops n/A* from the second factor.

    :raises errors.LevelRangeError: if the S+ table does not reach m + u_max.
    """
    point = _mn_point(model, ladders, exact_splus, n, x, variant=variant, tail=tail)
    if point.floored:
        logger.warning(
            "log(n)/theta* + x = {!r} is below zero; using level 0".format(
                math.log(n) / ladders.theta_star + x
            )
        )
    if point.clamped:
        logger.warning("The Mn approximation at x={!r} was clamped".format(x))
    return np.full(model.size, point.value)


def mn_cdf_curve(
    model: ScoreModel,
    ladders: LadderSystem,
    exact_splus: DistributionTable,
    n: int,
    x_grid: Sequence[float],
    *,
    variant: str = "statement",
    tail: str = "exact"
) -> DistributionTable:
    points = [
        _mn_point(model, ladders, exact_splus, n, x, variant=variant, tail=tail)
        for x in x_grid
    ]
    clamped = sum(p.clamped for p in points)
    floored = sum(p.floored for p in points)
    if floored:
        logger.warning(
            "{} grid point(s) fall below level 0 and use level 0".format(floored)
        )
    if clamped:
        logger.warning("{} Mn value(s) were clamped to [0, 1]".format(clamped))

    values = np.tile([p.value for p in points], (model.size, 1))
    return DistributionTable(
        statistic=Statistic.MN_CDF,
        levels=np.asarray(x_grid, dtype=float),
        values=values,
        states=model.alphabet,
        metadata=dict(
            model=model.digest,
            n=n,
            variant=variant,
            tail=tail,
            clamped=clamped,
            floored=floored,
        ),
    )


def kd_mn_approx(
    spectral: SpectralData, ladders: LadderSystem, n: int, x: float
) -> float:
    """The Gumbel limit exp(-K* exp(-theta* x)); n does not enter.

    :raises errors.UnsupportedModelError: unless scores lie in {-1, 0, 1}.
    """
    k_star = ladders.karlin_dembo_constant()
    return float(math.exp(-k_star * math.exp(-spectral.theta_star * x)))


def kd_mn_curve(
    spectral: SpectralData, ladders: LadderSystem, n: int, x_grid: Sequence[float]
) -> np.ndarray:
    k_star = ladders.karlin_dembo_constant()
    x = np.asarray(x_grid, dtype=float)
    return np.exp(-k_star * np.exp(-spectral.theta_star * x))


def _mn_point(model, ladders, exact_splus, n, x, *, variant, tail):
    if variant not in VARIANTS:
        raise ValueError("unknown variant {!r}".format(variant))
    if n < 2:
        raise ValueError("n must be >= 2, got {}".format(n))

    level = mn_level(ladders, n, x)
    floored = level < 0
    level = max(level, 0)
    if tail == "exact" and exact_splus.max_level < level + model.u_max:
        raise errors.LevelRangeError(
            statistic=Statistic.S_PLUS.value,
            level=(level + model.u_max) * model.lattice_step,
            maximum=exact_splus.max_level * model.lattice_step,
        )
    survival = survival_function(ladders, exact_splus, tail=tail)

    z = ladders.z
    first = float(z @ survival(level))
    second = sum(
        float(z @ matrix @ survival(level - k)) for k, matrix in ladders.Q_ell.items()
    )
    scale = n / ladders.A_star
    exponent = -scale * first + (scale if variant == "statement" else 1.0) * second

    raw = math.exp(exponent)
    value = min(max(raw, 0.0), 1.0)
    return _MnPoint(value, value != raw, floored)
