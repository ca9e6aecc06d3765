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

import numpy as np

from localscore.distributions._table import DistributionTable, Statistic
from localscore.ladder import LadderSystem
from localscore.model import ScoreModel
from localscore.spectral import SpectralData

logger = logging.getLogger(__name__)

# Extra lattice levels kept beyond log(n)/theta* + u_max.
LEVEL_MARGIN = 20
TAIL_BOUND_MARGIN = 0.5


def exact_splus_cdf(
    model: ScoreModel, ladders: LadderSystem, level_max: int
) -> DistributionTable:
    """The exact law of S+ for every start state, up to ``level_max``.

    Levels are lattice indices 0..level_max. Survivals are built first,

        P_a(S+ > l) = sum_{k>l} L^(k)_a. + sum_{k<=l} L^(k) P(S+ > l-k),

    and the cdf is their complement, so small tails keep full precision.
    """
    if level_max < 0:
        raise ValueError("level_max must be >= 0, got {}".format(level_max))

    masses = {level: matrix.sum(axis=1) for level, matrix in ladders.L_ell.items()}
    survival = np.zeros((model.size, level_max + 1))
    for level in range(level_max + 1):
        column = np.zeros(model.size)
        for k, matrix in ladders.L_ell.items():
            if k > level:
                column += masses[k]
            else:
                column += matrix @ survival[:, level - k]
        survival[:, level] = column

    step = model.lattice_step
    tail_bound = (
        ladders.c_inf
        * ladders.u_star
        * math.exp(-ladders.theta_star * level_max * step)
        * (1 + TAIL_BOUND_MARGIN)
    )
    logger.debug(
        "S+ table up to level {} (truncated tail <= {:.3e})".format(
            level_max * step, float(tail_bound.max())
        )
    )
    return DistributionTable(
        statistic=Statistic.S_PLUS,
        levels=np.arange(level_max + 1) * step,
        values=1.0 - survival,
        states=model.alphabet,
        survival=survival,
        metadata=dict(
            model=model.digest,
            level_max=level_max * step,
            tail_bound=dict(zip(model.alphabet, tail_bound.tolist())),
        ),
    )


def splus_tail_asymptotic(
    spectral: SpectralData, ladders: LadderSystem, k: int
) -> np.ndarray:
    """c(inf) u_a exp(-theta* k d), the large-k equivalent of P_a(S+ > kd)."""
    step = spectral.model.lattice_step
    return ladders.c_inf * spectral.u_star * math.exp(-spectral.theta_star * k * step)


def default_level_max(ladders: LadderSystem, n: int) -> int:
    """Lattice levels needed for Mn at horizon n with a safety margin."""
    step = ladders.lattice_step
    return (
        math.ceil(math.log(n) / ladders.theta_star / step)
        + ladders.model.u_max
        + LEVEL_MARGIN
    )


def survival_function(
    ladders: LadderSystem, exact_splus: DistributionTable = None, *, tail: str = "exact"
):
    """Return k -> P_.(S+ > kd) from the exact table or the asymptotic form.

    :param str tail: "exact" reads ``exact_splus``; "asymptotic" uses
                     c(inf) u exp(-theta* k d) instead.
    """
    if tail == "asymptotic":
        return lambda k: splus_tail_asymptotic(ladders.spectral, ladders, k)
    if tail != "exact":
        raise ValueError("unknown tail source {!r}".format(tail))
    if exact_splus is None:
        raise ValueError("the exact tail source needs an S+ table")
    return exact_splus.tail
