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

from localscore import errors
from localscore.distributions._splus import survival_function
from localscore.distributions._table import DistributionTable, Statistic
from localscore.ladder import LadderSystem
from localscore.model import ScoreModel

logger = logging.getLogger(__name__)


def q1_tail(
    model: ScoreModel,
    ladders: LadderSystem,
    exact_splus: DistributionTable,
    k_max: int,
    *,
    tail: str = "exact"
) -> DistributionTable:
    """Approximate P_a(Q1 > kd), the height of the first excursion.

    P_a(S+ > kd) - sum_{l<0} sum_b Q^(l)_ab P_b(S+ > (k-l)d), for k in
    0..k_max, clamped to [0, 1]. The S+ table must reach k_max + u_max.

    :raises errors.LevelRangeError: if the S+ table is too short.
    """
    if tail == "exact" and exact_splus.max_level < k_max + model.u_max:
        raise errors.LevelRangeError(
            statistic=Statistic.S_PLUS.value,
            level=(k_max + model.u_max) * model.lattice_step,
            maximum=exact_splus.max_level * model.lattice_step,
        )
    survival = survival_function(ladders, exact_splus, tail=tail)

    raw = np.empty((model.size, k_max + 1))
    for k in range(k_max + 1):
        column = np.array(survival(k), dtype=float)
        for level, matrix in ladders.Q_ell.items():
            column -= matrix @ survival(k - level)
        raw[:, k] = column

    values = np.clip(raw, 0.0, 1.0)
    clamped = int(np.count_nonzero(values != raw))
    if clamped:
        logger.warning(
            "{} Q1 tail values were clamped to [0, 1]".format(clamped)
        )
    return DistributionTable(
        statistic=Statistic.Q1_TAIL,
        levels=np.arange(k_max + 1) * model.lattice_step,
        values=values,
        states=model.alphabet,
        metadata=dict(model=model.digest, tail=tail, clamped=clamped),
    )


def kd_q1_constant(ladders: LadderSystem) -> np.ndarray:
    """lim_k exp(theta* k d) P_a(Q1 > kd) for every start state a.

    c(inf) (u_a - sum_{l<0} sum_b Q^(l)_ab u_b exp(theta* l d)), the
    purely exponential tail of the first excursion height.
    """
    theta = ladders.theta_star
    step = ladders.lattice_step
    u = ladders.u_star
    overshoot = sum(
        (matrix @ u) * math.exp(theta * level * step)
        for level, matrix in ladders.Q_ell.items()
    )
    return ladders.c_inf * (u - overshoot)


def kd_q1_tail(ladders: LadderSystem, k_max: int) -> DistributionTable:
    """Karlin-Dembo tail of Q1, kd_q1_constant() * exp(-theta* k d)."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0, got {}".format(k_max))
    model = ladders.model
    levels = np.arange(k_max + 1) * model.lattice_step
    decay = np.exp(-ladders.theta_star * levels)
    return DistributionTable(
        statistic=Statistic.Q1_TAIL,
        levels=levels,
        values=np.outer(kd_q1_constant(ladders), decay),
        states=model.alphabet,
        metadata=dict(model=model.digest, tail="karlin-dembo"),
    )
