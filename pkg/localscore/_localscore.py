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
from typing import Callable, List, Optional, Sequence

from localscore import distributions, ladder, montecarlo, spectral, steps
from localscore.model import (
    ScoreModel,
    ValidationReport,
    mean_score,
    stationary_distribution,
    validate_model,
)

logger = logging.getLogger(__name__)


_pre_hooks = []  # type: List[Callable]
_post_hooks = []  # type: List[Callable]


class AnalysisManager:
    """Run the analysis steps for one model and keep their results.

    Each step runs at most once and only after the steps before it. The
    S+ table is extended whenever a caller needs more levels.

    :param ScoreModel model: the model to analyse.
    :param float tol: sup-norm tolerance of the ladder solvers.
    :param bool strict: raise when the model fails validation.
    """

    def __init__(
        self,
        *,
        model: ScoreModel,
        tol: float = ladder.SOLVER_TOLERANCE,
        strict: bool = True,
        level_max: int = 0
    ) -> None:
        self._model = model
        self._tol = tol
        self._strict = strict
        self._level_max = level_max

        self._validation = None  # type: Optional[ValidationReport]
        self._spectral = None  # type: Optional[spectral.SpectralData]
        self._ladders = None  # type: Optional[ladder.LadderSystem]
        self._splus = None  # type: Optional[distributions.DistributionTable]
        self._completed = []  # type: List[steps.Step]

    @property
    def model(self) -> ScoreModel:
        return self._model

    @property
    def validation(self) -> ValidationReport:
        self.execute(steps.VALIDATE)
        return self._validation

    @property
    def spectral(self) -> spectral.SpectralData:
        self.execute(steps.SPECTRAL)
        return self._spectral

    @property
    def ladders(self) -> ladder.LadderSystem:
        self.execute(steps.LADDERS)
        return self._ladders

    @property
    def stationary(self):
        return stationary_distribution(self._model)

    def has_step_run(self, step: steps.Step) -> bool:
        return step in self._completed

    def execute(self, step: steps.Step) -> None:
        for current_step in step.previous_steps() + [step]:
            if self.has_step_run(current_step):
                continue
            logger.debug("{} ({})".format(current_step.description, current_step.name))
            _run_hooks(_pre_hooks, self, current_step)
            getattr(self, "_run_{}".format(current_step.name))()
            _run_hooks(_post_hooks, self, current_step)
            self._completed.append(current_step)

    def _run_validate(self):
        self._validation = validate_model(self._model)
        if self._strict:
            self._validation.raise_for_failure()

    def _run_spectral(self):
        self._spectral = spectral.solve_theta_star(self._model)

    def _run_ladders(self):
        self._ladders = ladder.solve_ladder_system(
            self._model, self._spectral, self._tol, mean=mean_score(self._model)
        )

    def _run_distributions(self):
        self._splus = distributions.exact_splus_cdf(
            self._model, self._ladders, self._level_max
        )

    def splus_table(self, level_max: int) -> distributions.DistributionTable:
        """The exact S+ table reaching at least ``level_max`` (lattice units)."""
        self.execute(steps.DISTRIBUTIONS)
        if self._splus.max_level < level_max:
            logger.debug("Extending the S+ table to level {}".format(level_max))
            self._level_max = level_max
            self._splus = distributions.exact_splus_cdf(
                self._model, self._ladders, level_max
            )
        return self._splus

    def q1_tail(self, k_max: int, *, tail: str = "exact"):
        table = self.splus_table(k_max + self._model.u_max)
        return distributions.q1_tail(self._model, self.ladders, table, k_max, tail=tail)

    def kd_q1_tail(self, k_max: int):
        return distributions.kd_q1_tail(self.ladders, k_max)

    def mn_curve(
        self,
        n: int,
        x_grid: Sequence[float],
        *,
        variant: str = "statement",
        tail: str = "exact"
    ) -> distributions.DistributionTable:
        table = self.splus_table(self._mn_levels(n, max(x_grid)))
        return distributions.mn_cdf_curve(
            self._model, self.ladders, table, n, x_grid, variant=variant, tail=tail
        )

    def mn_cdf(self, n: int, x: float, *, variant: str = "statement") -> float:
        table = self.splus_table(self._mn_levels(n, x))
        return float(
            distributions.mn_cdf_approx(
                self._model, self.ladders, table, n, x, variant=variant
            )[0]
        )

    def kd_curve(self, n: int, x_grid: Sequence[float]):
        return distributions.kd_mn_curve(self.spectral, self.ladders, n, x_grid)

    def pvalue(
        self, n: int, observed_score: int, *, variant: str = "statement"
    ) -> distributions.PValueReport:
        x = observed_score - _log_n_over_theta(self.spectral, n)
        table = self.splus_table(self._mn_levels(n, x))
        return distributions.pvalue(
            self._model, self.ladders, table, n, observed_score, variant=variant
        )

    def simulate(
        self,
        statistic: montecarlo.SimulationStatistic,
        *,
        horizon: int,
        replicates: int,
        seed: int,
        start: str = montecarlo.STATIONARY_START,
        threads: Optional[int] = None,
        progress: Optional[Callable[[int], None]] = None
    ) -> montecarlo.SimulationReport:
        config = montecarlo.SimulationConfig(
            model_digest=self._model.digest,
            statistic=statistic,
            horizon=horizon,
            replicates=replicates,
            seed=seed,
            start=start,
            threads=threads,
        )
        runners = {
            montecarlo.SimulationStatistic.S_PLUS: montecarlo.empirical_splus,
            montecarlo.SimulationStatistic.Q1: montecarlo.empirical_q1,
            montecarlo.SimulationStatistic.MN: montecarlo.empirical_mn,
        }
        try:
            runner = runners[statistic]
        except KeyError:
            raise ValueError(
                "{} is not a distribution statistic".format(statistic.value)
            ) from None
        return runner(self._model, config, progress=progress)

    def _mn_levels(self, n: int, x: float) -> int:
        level = max(distributions.mn_level(self.ladders, n, x), 0)
        return max(
            level + self._model.u_max,
            distributions.default_level_max(self.ladders, n),
        )


def _log_n_over_theta(spectral_data, n):
    return math.log(n) / spectral_data.theta_star


def _run_hooks(hooks, manager, step):
    for hook in hooks:
        hook(manager, step)


def register_pre_step_callback(func: Callable) -> Callable:
    """Call ``func(manager, step)`` before each analysis step runs."""
    _pre_hooks.append(func)
    return func


def register_post_step_callback(func: Callable) -> Callable:
    """Call ``func(manager, step)`` after each analysis step runs."""
    _post_hooks.append(func)
    return func
