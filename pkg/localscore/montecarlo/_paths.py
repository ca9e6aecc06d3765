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

from typing import Sequence

import numpy as np

from localscore.model import ScoreModel, stationary_distribution
from localscore.montecarlo._config import STATIONARY_START
from localscore.montecarlo._rng import block_generator


class TransitionSampler:
    """Inverse-cdf sampling of the next state, vectorized over replicates."""

    def __init__(self, model: ScoreModel) -> None:
        self.model = model
        cumulative = np.cumsum(model.transition, axis=1)
        cumulative[:, -1] = 1.0
        self._cumulative = cumulative
        self._last = model.size - 1

    @property
    def cumulative(self) -> np.ndarray:
        return self._cumulative

    def start_states(
        self, count: int, start: str, rng: np.random.Generator
    ) -> np.ndarray:
        """First states for ``count`` replicates.

        :param str start: a state label, or "pi" for a stationary start.
        """
        if start == STATIONARY_START:
            pi = np.cumsum(stationary_distribution(self.model))
            pi[-1] = 1.0
            draws = rng.random(count)
            return np.minimum(np.searchsorted(pi, draws, side="right"), self._last)
        return np.full(count, self.model.index(start), dtype=np.intp)

    def step(self, states: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        draws = rng.random(states.shape[0])
        following = (self._cumulative[states] <= draws[:, None]).sum(axis=1)
        return np.minimum(following, self._last)


def simulate_path(
    model: ScoreModel, n: int, seed: int, start: str = STATIONARY_START
) -> np.ndarray:
    """A path A_0, ..., A_n of state indices.

    Next states are drawn ahead of time per state, then consumed in order
    as the path visits that state.
    """
    sampler = TransitionSampler(model)
    rng = block_generator(seed, 0)
    state = int(sampler.start_states(1, start, rng)[0])

    draws = rng.random((model.size, n))
    queues = [
        np.minimum(
            np.searchsorted(sampler.cumulative[a], draws[a], side="right"),
            model.size - 1,
        ).tolist()
        for a in range(model.size)
    ]
    used = [0] * model.size
    path = [state]
    for _ in range(n):
        following = queues[state][used[state]]
        used[state] += 1
        state = following
        path.append(state)
    return np.array(path, dtype=np.intp)


def lindley_local_score(model: ScoreModel, path: Sequence[int]) -> int:
    """Mn of a path via the reflected walk W_k = max(W_{k-1} + f(A_k), 0).

    The first state only fixes where the chain starts; its score does not
    count.
    """
    return lindley_of_increments(model.scores[np.asarray(path)[1:]])


def lindley_of_increments(increments: Sequence[int]) -> int:
    w = best = 0
    for value in increments:
        w = max(w + int(value), 0)
        best = max(best, w)
    return best


def brute_force_local_score(increments: Sequence[int]) -> int:
    """max over k <= l of S_l - S_k, by checking every pair."""
    sums = np.concatenate(([0], np.cumsum(np.asarray(increments, dtype=np.int64))))
    best = 0
    for k in range(len(sums)):
        for end in range(k, len(sums)):
            best = max(best, int(sums[end] - sums[k]))
    return best
