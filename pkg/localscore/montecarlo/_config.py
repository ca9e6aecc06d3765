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

import enum
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from localscore.montecarlo._rng import BATCH_SIZE, GENERATOR

SAFETY_HORIZON = 10 ** 7
STATIONARY_START = "pi"


class SimulationStatistic(enum.Enum):
    S_PLUS = "splus"
    Q1 = "q1"
    MN = "mn"
    LADDER = "ladder"


@dataclass(frozen=True)
class SimulationConfig:
    """Everything that determines a simulation run.

    :param str start: a state label for a fixed first state, or "pi" to
                      draw it from the stationary distribution.
    """

    model_digest: str
    statistic: SimulationStatistic
    horizon: int
    replicates: int
    seed: int
    start: str = STATIONARY_START
    batch_size: int = BATCH_SIZE
    threads: Optional[int] = None
    safety_horizon: int = SAFETY_HORIZON

    def __post_init__(self):
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1, got {}".format(self.replicates))
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1, got {}".format(self.horizon))
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1, got {}".format(self.batch_size))

    def to_dict(self) -> Dict[str, Any]:
        document = asdict(self)
        document["statistic"] = self.statistic.value
        document["generator"] = GENERATOR
        return document


@dataclass(frozen=True, eq=False)
class SimulationReport:
    """Empirical law of a nonnegative integer statistic.

    ``counts[k]`` is the number of completed replicates whose value is k
    (score units). Replicates cut by the safety horizon are counted in
    ``discarded`` and left out of every estimate.
    """

    config: SimulationConfig
    counts: np.ndarray = field(repr=False)
    discarded: int = 0
    wall_time: float = 0.0
    generator: str = GENERATOR
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def replicates(self) -> int:
        return int(self.counts.sum())

    @property
    def levels(self) -> np.ndarray:
        return np.arange(len(self.counts))

    @property
    def cdf(self) -> np.ndarray:
        if self.replicates == 0:
            return np.zeros(len(self.counts))
        return np.cumsum(self.counts) / self.replicates

    @property
    def tail(self) -> np.ndarray:
        return 1.0 - self.cdf

    @property
    def standard_errors(self) -> np.ndarray:
        return _binomial_se(self.cdf, self.replicates)

    def cdf_at(self, level: int) -> float:
        if level < 0:
            return 0.0
        if level >= len(self.counts):
            return 1.0 if self.replicates else 0.0
        return float(self.cdf[level])

    def tail_at(self, level: int) -> float:
        return 1.0 - self.cdf_at(level)

    def standard_error_at(self, level: int) -> float:
        return float(_binomial_se(self.cdf_at(level), self.replicates))


@dataclass(frozen=True, eq=False)
class PassageReport:
    """Empirical joint law of (level, state) at a first passage.

    ``counts[i, b]`` counts replicates that first crossed zero at
    ``levels[i]`` (score units) in state b. Rows need not add up to
    ``replicates`` for ascents, which may never happen.
    """

    levels: np.ndarray
    states: tuple
    counts: np.ndarray = field(repr=False)
    replicates: int
    discarded: int = 0

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / max(self.replicates, 1)

    @property
    def standard_errors(self) -> np.ndarray:
        return _binomial_se(self.frequencies, self.replicates)

    @property
    def passage_probability(self) -> float:
        return float(self.frequencies.sum())


def _binomial_se(p, replicates: int):
    if replicates == 0:
        return np.zeros_like(np.asarray(p, dtype=float))
    p = np.asarray(p, dtype=float)
    return np.sqrt(p * (1.0 - p) / replicates)
