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

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from localscore import montecarlo
from localscore.montecarlo import SimulationConfig, SimulationReport
from localscore.montecarlo import SimulationStatistic as Stat
from localscore.montecarlo._rng import block_sizes


def _config(model, statistic, **kwargs):
    kwargs.setdefault("horizon", 100)
    kwargs.setdefault("replicates", 20000)
    kwargs.setdefault("seed", 11)
    return SimulationConfig(model_digest=model.digest, statistic=statistic, **kwargs)


class TestStreams:
    def test_block_sizes(self):
        assert block_sizes(10000, 4096) == [4096, 4096, 1808]
        assert block_sizes(4096, 4096) == [4096]

    def test_blocks_are_reproducible(self):
        first = montecarlo.block_generator(5, 2).random(4)
        again = montecarlo.block_generator(5, 2).random(4)
        other = montecarlo.block_generator(5, 3).random(4)

        assert_array_equal(first, again)
        assert not np.array_equal(first, other)


class TestPaths:
    def test_lindley_matches_brute_force(self):
        rng = np.random.default_rng(3)
        for _ in range(2000):
            increments = rng.integers(-3, 3, size=rng.integers(0, 13))
            assert montecarlo.lindley_of_increments(
                increments
            ) == montecarlo.brute_force_local_score(increments)

    def test_first_state_does_not_count(self, iid_model):
        assert montecarlo.lindley_local_score(iid_model, [1, 0, 0]) == 0
        assert montecarlo.lindley_local_score(iid_model, [0, 1, 1]) == 2

    def test_simulate_path(self, dna_model):
        path = montecarlo.simulate_path(dna_model, 50, seed=9, start="G")

        assert path.shape == (51,)
        assert path[0] == 2
        assert_array_equal(path, montecarlo.simulate_path(dna_model, 50, seed=9, start="G"))

    def test_fixed_start(self, dna_model):
        sampler = montecarlo.TransitionSampler(dna_model)
        rng = montecarlo.block_generator(0, 0)

        assert_array_equal(sampler.start_states(3, "T", rng), [3, 3, 3])

    def test_step_frequencies(self, dna_model):
        sampler = montecarlo.TransitionSampler(dna_model)
        rng = montecarlo.block_generator(1, 0)
        following = sampler.step(np.zeros(100000, dtype=np.intp), rng)

        assert_allclose(
            np.bincount(following, minlength=4) / 100000,
            dna_model.transition[0],
            atol=0.01,
        )


class TestConfig:
    def test_rejects_empty_runs(self, iid_model):
        with pytest.raises(ValueError):
            _config(iid_model, Stat.S_PLUS, replicates=0)

    def test_document(self, iid_model):
        document = _config(iid_model, Stat.MN).to_dict()

        assert document["statistic"] == "mn"
        assert document["generator"] == "PCG64"

    def test_report_estimates(self, iid_model):
        report = SimulationReport(
            config=_config(iid_model, Stat.S_PLUS), counts=np.array([1, 2, 1])
        )

        assert_allclose(report.cdf, [0.25, 0.75, 1.0])
        assert report.cdf_at(-1) == 0.0
        assert report.cdf_at(10) == 1.0
        assert report.tail_at(1) == pytest.approx(0.25)
        assert report.standard_error_at(0) == pytest.approx(np.sqrt(0.25 * 0.75 / 4))

    def test_statistic_must_match(self, iid_model):
        with pytest.raises(ValueError):
            montecarlo.empirical_splus(iid_model, _config(iid_model, Stat.MN))


class TestEmpirical:
    def test_splus_iid(self, iid_model):
        report = montecarlo.empirical_splus(iid_model, _config(iid_model, Stat.S_PLUS))

        for level in range(6):
            assert report.cdf_at(level) == pytest.approx(
                1 - (3 / 7) ** (level + 1), abs=0.02
            )

    def test_threads_do_not_change_results(self, dna_model):
        config = dict(replicates=3000, batch_size=500, horizon=60)
        single = montecarlo.empirical_mn(
            dna_model, _config(dna_model, Stat.MN, threads=1, **config)
        )
        several = montecarlo.empirical_mn(
            dna_model, _config(dna_model, Stat.MN, threads=3, **config)
        )

        assert_array_equal(single.counts, several.counts)
        assert single.replicates == 3000

    def test_q1_iid_gamblers_ruin(self, iid_model):
        report = montecarlo.empirical_q1(iid_model, _config(iid_model, Stat.Q1))
        r = 7 / 3

        assert report.discarded == 0
        for level in range(5):
            assert report.tail_at(level) == pytest.approx(
                (r - 1) / (r ** (level + 2) - 1), abs=0.02
            )

    def test_mn_dominates_splus(self, dna_model):
        splus = montecarlo.empirical_splus(
            dna_model, _config(dna_model, Stat.S_PLUS, replicates=2000)
        )
        mn = montecarlo.empirical_mn(
            dna_model, _config(dna_model, Stat.MN, replicates=2000)
        )

        for level in range(5):
            assert mn.cdf_at(level) <= splus.cdf_at(level)

    def test_progress_reaches_total(self, iid_model):
        seen = []
        montecarlo.empirical_splus(
            iid_model,
            _config(iid_model, Stat.S_PLUS, replicates=5000, batch_size=1000),
            progress=seen.append,
        )

        assert sorted(seen) == [1000, 2000, 3000, 4000, 5000]

    def test_first_descent_iid(self, iid_model):
        report = montecarlo.empirical_first_descent(iid_model, "up", 2000, seed=2)

        assert report.levels.tolist() == [-1]
        assert report.counts[0, 1] == 0
        assert report.passage_probability == pytest.approx(1.0)

    def test_first_ascent_iid(self, iid_model):
        report = montecarlo.empirical_first_ascent(
            iid_model, "down", 20000, seed=4, horizon=2000
        )

        assert report.levels.tolist() == [1]
        assert report.passage_probability == pytest.approx(3 / 7, abs=0.02)

    def test_ladder_epochs_iid(self, iid_model):
        mean = montecarlo.empirical_ladder_epochs(iid_model, 500, seed=6)

        assert mean == pytest.approx(2.5, rel=0.1)
