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

import math
from typing import Any, Dict, NamedTuple, Optional

from localscore import errors
from localscore.distributions._mn import kd_mn_approx, mn_cdf_approx
from localscore.distributions._table import DistributionTable
from localscore.ladder import LadderSystem
from localscore.model import ScoreModel


class PValueReport(NamedTuple):
    model: str
    n: int
    observed_score: int
    x: float
    improved: float
    kd: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return self._asdict()


def pvalue(
    model: ScoreModel,
    ladders: LadderSystem,
    exact_splus: DistributionTable,
    n: int,
    observed_score: int,
    *,
    variant: str = "statement"
) -> PValueReport:
    """Tail probability of an observed local score under both approximations.

    The improved value is 1 - P(Mn <= s) with s = log(n)/theta* + x; the
    Karlin-Dembo value is None for scores outside {-1, 0, 1}.
    """
    if observed_score < 0 or int(observed_score) != observed_score:
        raise ValueError(
            "the observed score must be a nonnegative integer, got {!r}".format(
                observed_score
            )
        )

    x = observed_score - math.log(n) / ladders.theta_star
    improved = 1.0 - float(
        mn_cdf_approx(model, ladders, exact_splus, n, x, variant=variant)[0]
    )
    try:
        kd = 1.0 - kd_mn_approx(ladders.spectral, ladders, n, x)  # type: Optional[float]
    except errors.UnsupportedModelError:
        kd = None

    return PValueReport(
        model=model.digest,
        n=n,
        observed_score=int(observed_score),
        x=x,
        improved=improved,
        kd=kd,
    )
