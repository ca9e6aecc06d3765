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

from typing import Dict, Iterator, Tuple

import numpy as np

from localscore.model import ScoreModel


class ScoreSplitMatrices:
    """The transition matrix split by the lattice score of the target state.

    ``split[j]`` is P^(j), holding p_ab where the lattice score of b is j
    and zero elsewhere, for j in [-u_max, v_max]. The matrices add up to
    the transition matrix exactly.
    """

    def __init__(self, model: ScoreModel) -> None:
        self.u_max = model.u_max
        self.v_max = model.v_max
        self._matrices = dict()  # type: Dict[int, np.ndarray]
        for j in range(-self.u_max, self.v_max + 1):
            mask = (model.lattice_scores == j).astype(float)
            matrix = model.transition * mask[None, :]
            matrix.setflags(write=False)
            self._matrices[j] = matrix

    def __getitem__(self, level: int) -> np.ndarray:
        return self._matrices[level]

    def __iter__(self) -> Iterator[int]:
        return iter(self._matrices)

    def __len__(self) -> int:
        return len(self._matrices)

    def items(self) -> Iterator[Tuple[int, np.ndarray]]:
        return iter(self._matrices.items())

    def nonzero_levels(self):
        return [j for j, matrix in self._matrices.items() if matrix.any()]


def score_split(model: ScoreModel) -> ScoreSplitMatrices:
    return ScoreSplitMatrices(model)
