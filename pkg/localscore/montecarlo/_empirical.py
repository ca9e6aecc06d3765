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
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional

import numpy as np

from localscore.common import get_thread_count
from localscore.model import ScoreModel
from localscore.montecarlo._config import (
    SAFETY_HORIZON,
    STATIONARY_START,
    PassageReport,
    SimulationConfig,
    SimulationReport,
    SimulationStatistic,
)
from localscore.montecarlo._paths import TransitionSampler
from localscore.montecarlo._rng import BATCH_SIZE, block_generator, block_sizes

logger = logging.getLogger(__name__)

Progress = Optional[Callable[[int], None]]


def empirical_splus(
    model: ScoreModel, config: SimulationConfig, *, progress: Progress = None
) -> SimulationReport:
    """max(0, max_{k<=n} S_k) per replicate, over the horizon n."""
    _check_statistic(config, SimulationStatistic.S_PLUS)
    sampler = TransitionSampler(model)
    scores = model.scores

    def run(rng, size):
        states = sampler.start_states(size, config.start, rng)
        walk = np.zeros(size, dtype=np.int64)
        best = np.zeros(size, dtype=np.int64)
        for _ in range(config.horizon):
            states = sampler.step(states, rng)
            walk += scores[states]
            np.maximum(best, walk, out=best)
        return np.bincount(best), 0

    return _simulate(config, run, progress)


def empirical_mn(
    model: ScoreModel, config: SimulationConfig, *, progress: Progress = None
) -> SimulationReport:
    """The local score Mn per replicate, through the Lindley recursion."""
    _check_statistic(config, SimulationStatistic.MN)
    sampler = TransitionSampler(model)
    scores = model.scores

    def run(rng, size):
        states = sampler.start_states(size, config.start, rng)
        reflected = np.zeros(size, dtype=np.int64)
        best = np.zeros(size, dtype=np.int64)
        for _ in range(config.horizon):
            states = sampler.step(states, rng)
            np.maximum(reflected + scores[states], 0, out=reflected)
            np.maximum(best, reflected, out=best)
        return np.bincount(best), 0

    return _simulate(config, run, progress)


def empirical_q1(
    model: ScoreModel, config: SimulationConfig, *, progress: Progress = None
) -> SimulationReport:
    """Height of the first nonnegative excursion per replicate.

    Each replicate runs until the walk first goes below zero. Replicates
    still running after ``config.safety_horizon`` steps are discarded.
    """
    _check_statistic(config, SimulationStatistic.Q1)
    sampler = TransitionSampler(model)
    scores = model.scores

    def run(rng, size):
        states = sampler.start_states(size, config.start, rng)
        walk = np.zeros(size, dtype=np.int64)
        best = np.zeros(size, dtype=np.int64)
        heights = []  # type: List[np.ndarray]
        for _ in range(config.safety_horizon):
            if not states.size:
                break
            states = sampler.step(states, rng)
            walk += scores[states]
            below = walk < 0
            if below.any():
                heights.append(best[below])
                keep = ~below
                states, walk, best = states[keep], walk[keep], best[keep]
            np.maximum(best, walk, out=best)
        finished = np.concatenate(heights) if heights else np.zeros(0, dtype=np.int64)
        return np.bincount(finished), int(states.size)

    return _simulate(config, run, progress)


def empirical_ladder_epochs(
    model: ScoreModel,
    m_count: int,
    seed: int,
    *,
    replicates: int = 16,
    start: str = STATIONARY_START,
    safety_horizon: int = SAFETY_HORIZON
) -> float:
    """Mean of K_m / m, K_m being the time of the m-th strict new minimum."""
    sampler = TransitionSampler(model)
    rng = block_generator(seed, 0)
    scores = model.scores

    states = sampler.start_states(replicates, start, rng)
    walk = np.zeros(replicates, dtype=np.int64)
    minimum = np.zeros(replicates, dtype=np.int64)
    epochs = np.zeros(replicates, dtype=np.int64)
    times = np.full(replicates, -1, dtype=np.int64)
    active = np.arange(replicates)

    for t in range(1, safety_horizon + 1):
        if not active.size:
            break
        states[active] = sampler.step(states[active], rng)
        walk[active] += scores[states[active]]
        record = active[walk[active] < minimum[active]]
        minimum[record] = walk[record]
        epochs[record] += 1
        done = record[epochs[record] == m_count]
        times[done] = t
        active = active[times[active] < 0]

    finished = times[times >= 0]
    if active.size:
        logger.warning(
            "{} ladder replicate(s) did not reach {} epochs".format(active.size, m_count)
        )
    if not finished.size:
        return float("nan")
    return float(np.mean(finished / m_count))


def empirical_first_descent(
    model: ScoreModel,
    start: str,
    replicates: int,
    seed: int,
    *,
    safety_horizon: int = SAFETY_HORIZON,
    batch_size: int = BATCH_SIZE,
    threads: Optional[int] = None
) -> PassageReport:
    """Empirical law of (S, A) at the first time the walk goes below zero."""
    step = model.lattice_step
    levels = np.arange(-model.u_max, 0) * step

    def landed(walk):
        return walk < 0

    def row(walk):
        return walk // step + model.u_max

    return _passages(
        model, start, replicates, seed, levels, landed, row,
        safety_horizon=safety_horizon, batch_size=batch_size, threads=threads,
        discard=True,
    )


def empirical_first_ascent(
    model: ScoreModel,
    start: str,
    replicates: int,
    seed: int,
    *,
    horizon: int = 10000,
    batch_size: int = BATCH_SIZE,
    threads: Optional[int] = None
) -> PassageReport:
    """Empirical law of (S, A) at the first time the walk goes above zero.

    Replicates that stay at or below zero for ``horizon`` steps count as
    never ascending.
    """
    step = model.lattice_step
    levels = np.arange(1, model.v_max + 1) * step

    def landed(walk):
        return walk > 0

    def row(walk):
        return walk // step - 1

    return _passages(
        model, start, replicates, seed, levels, landed, row,
        safety_horizon=horizon, batch_size=batch_size, threads=threads,
        discard=False,
    )


def _passages(
    model, start, replicates, seed, levels, landed, row, *,
    safety_horizon, batch_size, threads, discard
):
    sampler = TransitionSampler(model)
    scores = model.scores

    def run(rng, size):
        counts = np.zeros((len(levels), model.size), dtype=np.int64)
        states = sampler.start_states(size, start, rng)
        walk = np.zeros(size, dtype=np.int64)
        for _ in range(safety_horizon):
            if not states.size:
                break
            states = sampler.step(states, rng)
            walk += scores[states]
            crossed = landed(walk)
            if crossed.any():
                np.add.at(counts, (row(walk[crossed]), states[crossed]), 1)
                keep = ~crossed
                states, walk = states[keep], walk[keep]
        return counts, int(states.size)

    results = _run_blocks(seed, replicates, batch_size, threads, run, None)
    counts = sum(result[0] for result in results)
    remaining = sum(result[1] for result in results)
    return PassageReport(
        levels=levels,
        states=model.alphabet,
        counts=counts,
        replicates=replicates - remaining if discard else replicates,
        discarded=remaining if discard else 0,
    )


def _check_statistic(config, statistic):
    if config.statistic is not statistic:
        raise ValueError(
            "expected a {} configuration, got {}".format(
                statistic.value, config.statistic.value
            )
        )


def _simulate(config: SimulationConfig, run, progress: Progress) -> SimulationReport:
    started = time.monotonic()
    results = _run_blocks(
        config.seed, config.replicates, config.batch_size, config.threads, run, progress
    )
    width = max(len(counts) for counts, _ in results)
    counts = np.zeros(width, dtype=np.int64)
    for block_counts, _ in results:
        counts[: len(block_counts)] += block_counts
    discarded = sum(d for _, d in results)
    if discarded:
        logger.warning(
            "{} replicate(s) hit the safety horizon of {} steps and were "
            "discarded".format(discarded, config.safety_horizon)
        )

    wall_time = time.monotonic() - started
    logger.debug(
        "Simulated {} replicates of {} in {:.2f}s".format(
            config.replicates, config.statistic.value, wall_time
        )
    )
    return SimulationReport(
        config=config, counts=counts, discarded=discarded, wall_time=wall_time
    )


def _run_blocks(seed, replicates, batch_size, threads, run, progress) -> list:
    """Run every block and return the results in block order."""
    sizes = block_sizes(replicates, batch_size)
    workers = threads or get_thread_count()

    def job(block):
        return run(block_generator(seed, block), sizes[block])

    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(job, block): block for block in range(len(sizes))}
        done = 0
        for future in as_completed(futures):
            future.result()
            done += sizes[futures[future]]
            if progress:
                progress(done)
        ordered = sorted(futures.items(), key=lambda item: item[1])
        return [future.result() for future, _ in ordered]
