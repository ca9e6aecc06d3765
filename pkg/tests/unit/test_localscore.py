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

import pytest
from numpy.testing import assert_allclose

from localscore import _localscore, errors, montecarlo, steps
from localscore._localscore import (
    AnalysisManager,
    register_post_step_callback,
    register_pre_step_callback,
)
from localscore.model import ScoreModel


@pytest.fixture
def hooks(monkeypatch):
    monkeypatch.setattr(_localscore, "_pre_hooks", [])
    monkeypatch.setattr(_localscore, "_post_hooks", [])


class TestSteps:
    def test_previous_steps(self):
        assert steps.VALIDATE.previous_steps() == []
        assert steps.LADDERS.previous_steps() == [steps.VALIDATE, steps.SPECTRAL]
        assert steps.DISTRIBUTIONS.previous_steps() == steps.STEPS[:-1]

    def test_unregistered_step(self):
        with pytest.raises(errors.InvalidStepError):
            steps.Step("gumbel", "not registered").previous_steps()


class TestAnalysisManager:
    def test_steps_run_once_in_order(self, hooks, iid_model):
        seen = []
        register_pre_step_callback(lambda manager, step: seen.append(("pre", step.name)))
        register_post_step_callback(
            lambda manager, step: seen.append(("post", step.name))
        )
        manager = AnalysisManager(model=iid_model)

        manager.ladders
        manager.ladders

        assert seen == [
            ("pre", "validate"),
            ("post", "validate"),
            ("pre", "spectral"),
            ("post", "spectral"),
            ("pre", "ladders"),
            ("post", "ladders"),
        ]
        assert manager.has_step_run(steps.LADDERS)
        assert not manager.has_step_run(steps.DISTRIBUTIONS)

    def test_strict_validation(self):
        model = ScoreModel(
            alphabet=["down", "up"], transition=[[0.3, 0.7], [0.3, 0.7]], scores=[-1, 1]
        )
        manager = AnalysisManager(model=model)

        with pytest.raises(errors.ModelValidationError):
            manager.spectral

    def test_lenient_validation_keeps_report(self):
        model = ScoreModel(
            alphabet=["down", "up"], transition=[[0, 1], [1, 0]], scores=[-1, 1]
        )
        manager = AnalysisManager(model=model, strict=False)

        assert not manager.validation.passed

    def test_splus_table_grows(self, iid_model):
        manager = AnalysisManager(model=iid_model)

        assert manager.splus_table(5).max_level == 5
        assert manager.splus_table(3).max_level == 5
        assert manager.splus_table(12).max_level == 12

    def test_q1_tail(self, iid_model):
        table = AnalysisManager(model=iid_model).q1_tail(8)

        assert_allclose(
            table.values[0], [(4 / 7) * (3 / 7) ** (k + 1) for k in range(9)], atol=1e-8
        )

    def test_mn_and_pvalue(self, iid_model):
        manager = AnalysisManager(model=iid_model)
        curve = manager.mn_curve(200, [-2.0, 0.0, 2.0])

        assert curve.values[0, 1] == pytest.approx(manager.mn_cdf(200, 0.0))
        report = manager.pvalue(200, 9)
        assert report.improved == pytest.approx(
            1 - manager.mn_cdf(200, 9 - math.log(200) / manager.spectral.theta_star)
        )
        assert manager.kd_curve(200, [0.0])[0] == pytest.approx(math.exp(-24 / 245))

    def test_simulate(self, iid_model):
        manager = AnalysisManager(model=iid_model)
        report = manager.simulate(
            montecarlo.SimulationStatistic.S_PLUS, horizon=20, replicates=100, seed=1
        )

        assert report.replicates == 100
        assert report.config.model_digest == iid_model.digest

    def test_simulate_ladder_is_not_a_distribution(self, iid_model):
        manager = AnalysisManager(model=iid_model)

        with pytest.raises(ValueError):
            manager.simulate(
                montecarlo.SimulationStatistic.LADDER,
                horizon=20,
                replicates=10,
                seed=1,
            )
