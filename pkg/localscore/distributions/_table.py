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
from typing import Any, Dict, Optional, Sequence

import numpy as np

from localscore import errors


class Statistic(enum.Enum):
    S_PLUS = "splus"
    Q1_TAIL = "q1"
    MN_CDF = "mn"


class DistributionTable:
    """Per-state values of a distribution over a grid.

    ``values[i, k]`` belongs to state ``states[i]`` at ``levels[k]``. Levels
    are in score units for S+ and Q1, and are x offsets for Mn.
    """

    def __init__(
        self,
        *,
        statistic: Statistic,
        levels: Sequence[float],
        values: np.ndarray,
        states: Sequence[str],
        survival: Optional[np.ndarray] = None,
        metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        self.statistic = statistic
        self.levels = np.asarray(levels)
        self.values = np.asarray(values, dtype=float)
        self.states = tuple(states)
        self.survival = survival
        self.metadata = dict(metadata or {})

        if self.values.shape != (len(self.states), len(self.levels)):
            raise ValueError(
                "values have shape {} for {} states and {} levels".format(
                    self.values.shape, len(self.states), len(self.levels)
                )
            )
        for array in (self.levels, self.values, self.survival):
            if array is not None:
                array.setflags(write=False)

    def __repr__(self):
        return "DistributionTable(statistic={}, levels={}, states={!r})".format(
            self.statistic.value, len(self.levels), self.states
        )

    @property
    def max_level(self) -> int:
        """Largest lattice index held by the table."""
        return len(self.levels) - 1

    def column(self, index: int) -> np.ndarray:
        """Values of every state at lattice index ``index``.

        :raises errors.LevelRangeError: if the index is outside the table.
        """
        if index < 0 or index > self.max_level:
            raise errors.LevelRangeError(
                statistic=self.statistic.value, level=index, maximum=self.max_level
            )
        return self.values[:, index]

    def tail(self, index: int) -> np.ndarray:
        """P_a(S+ > level) at lattice index ``index``, for S+ tables."""
        if self.survival is None:
            raise ValueError("{} tables carry no survival".format(self.statistic.value))
        if index < 0 or index > self.max_level:
            raise errors.LevelRangeError(
                statistic=self.statistic.value, level=index, maximum=self.max_level
            )
        return self.survival[:, index]

    def mixture(self, weights: Sequence[float]) -> np.ndarray:
        """Weight the per-state rows, e.g. by the stationary vector."""
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (len(self.states),):
            raise ValueError(
                "{} weights given for {} states".format(weights.size, len(self.states))
            )
        return weights @ self.values
