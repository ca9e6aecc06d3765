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
from numpy.testing import assert_allclose

from localscore import errors, ladder, spectral
from localscore.model import ScoreModel, partition_states


class TestTuples:
    def test_single_step_descent(self):
        assert ladder.descent_tuples(0, 1) == ((-1,),)

    def test_descent_from_one_with_two_step_sizes(self):
        assert set(ladder.descent_tuples(1, 2)) == {(-2,), (-1, -1), (-1, -2)}

    def test_ascent_from_minus_one(self):
        assert set(ladder.ascent_tuples(-1, 2)) == {(2,), (1, 1), (1, 2)}

    def test_wrong_side_start_is_empty(self):
        assert ladder.descent_tuples(-1, 2) == ()
        assert ladder.ascent_tuples(1, 2) == ()

    def test_partial_levels_stay_on_the_start_side(self):
        for sequence in ladder.descent_tuples(3, 2):
            partial = 3 + np.cumsum(sequence)
            assert np.all(partial[:-1] >= 0)
            assert partial[-1] < 0

    def test_group_by_landing(self):
        groups = ladder.group_by_landing(1, ladder.descent_tuples(1, 2))

        assert sorted(groups) == [-2, -1]
        assert set(groups[-1]) == {(-2,), (-1, -1)}
        assert groups[-2] == ((-1, -2),)


class TestSplit:
    def test_parts_add_up(self, wide_model):
        split = ladder.score_split(wide_model)

        assert sorted(split) == [-2, -1, 0, 1, 2]
        assert_allclose(sum(m for _, m in split.items()), wide_model.transition)
        assert not split[0].any()
        assert split.nonzero_levels() == [-2, -1, 1, 2]

    def test_dna_zero_part(self, dna_model):
        split = ladder.score_split(dna_model)

        assert_allclose(split[0][:, 2], dna_model.transition[:, 2])
        assert not split[0][:, [0, 1, 3]].any()


class TestIidLadders:
    def test_first_descent(self, iid_ladders):
        assert sorted(iid_ladders.Q_ell) == [-1]
        assert_allclose(iid_ladders.Q_ell[-1], [[1, 0], [1, 0]], atol=1e-8)
        assert_allclose(iid_ladders.expected_descent, [-1, -1], atol=1e-8)

    def test_first_ascent(self, iid_ladders):
        assert sorted(iid_ladders.L_ell) == [1]
        assert_allclose(iid_ladders.L_ell[1], [[0, 3 / 7], [0, 3 / 7]], atol=1e-8)
        assert_allclose(iid_ladders.L_inf, [3 / 7, 3 / 7], atol=1e-8)

    def test_invariant_vectors(self, iid_ladders):
        assert_allclose(iid_ladders.z, [1, 0], atol=1e-8)
        assert_allclose(iid_ladders.w, [0, 1], atol=1e-8)
        assert_allclose(iid_ladders.G_inf.sum(axis=1), 1.0, atol=1e-8)

    def test_constants(self, iid_ladders):
        assert iid_ladders.c == pytest.approx(1.0, abs=1e-8)
        assert iid_ladders.c_inf == pytest.approx(6 / 7, abs=1e-8)
        assert iid_ladders.c_inf_alternate == pytest.approx(6 / 7, abs=1e-8)
        assert iid_ladders.A_star == pytest.approx(2.5, abs=1e-8)
        assert iid_ladders.karlin_dembo_constant() == pytest.approx(24 / 245, abs=1e-8)

    def test_convergence_is_monotone(self, iid_ladders):
        assert iid_ladders.q_convergence.monotone
        assert iid_ladders.l_convergence.monotone
        assert iid_ladders.q_convergence.residual <= ladder.SOLVER_TOLERANCE

    def test_report(self, iid_ladders):
        report = iid_ladders.to_report()

        assert report["K_star"] == pytest.approx(24 / 245, abs=1e-8)
        assert report["z"] == pytest.approx({"down": 1.0, "up": 0.0}, abs=1e-8)
        assert set(report["convergence"]) == {"Q", "L"}


class TestDnaLadders:
    def test_convergence_is_monotone(self, dna_ladders):
        assert dna_ladders.q_convergence.monotone
        assert dna_ladders.l_convergence.monotone

    def test_descent_is_certain(self, dna_ladders):
        assert_allclose(dna_ladders.Q.sum(axis=1), 1.0, atol=1e-10)
        assert not dna_ladders.Q[:, 2:].any()

    def test_ascent_is_defective(self, dna_ladders):
        assert np.all(dna_ladders.L_inf > 0)
        assert np.all(dna_ladders.L_inf < 1)

    def test_z_lives_on_negative_states(self, dna_ladders):
        assert dna_ladders.z[2] == 0 and dna_ladders.z[3] == 0
        assert dna_ladders.z.sum() == pytest.approx(1.0)
        assert dna_ladders.z_residual <= 1e-10

    def test_w_lives_on_positive_states(self, dna_ladders):
        assert_allclose(dna_ladders.w, [0, 0, 0, 1])
        assert dna_ladders.g_row_deviation <= 1e-8

    def test_constants(self, dna_ladders):
        assert dna_ladders.c > 0
        assert dna_ladders.c_inf > 0
        assert dna_ladders.c_inf == pytest.approx(dna_ladders.c_inf_alternate, rel=1e-8)
        assert dna_ladders.A_star > 1
        assert dna_ladders.supports_karlin_dembo()

    def test_invariant_under_relabeling(self, dna_model, dna_ladders):
        order = [3, 1, 2, 0]
        permuted = dna_model.permuted(order)
        ladders = ladder.solve_ladder_system(
            permuted, spectral.solve_theta_star(permuted)
        )

        assert ladders.c_inf == pytest.approx(dna_ladders.c_inf, rel=1e-9)
        assert ladders.A_star == pytest.approx(dna_ladders.A_star, rel=1e-9)
        assert_allclose(ladders.L_inf, dna_ladders.L_inf[order], atol=1e-10)
        assert_allclose(ladders.z, dna_ladders.z[order], atol=1e-10)
        assert_allclose(ladders.w, dna_ladders.w[order], atol=1e-10)
        relabel = np.ix_(order, order)
        assert_allclose(ladders.G_inf, dna_ladders.G_inf[relabel], atol=1e-10)
        for family, original in (
            (ladders.Q_ell, dna_ladders.Q_ell),
            (ladders.L_ell, dna_ladders.L_ell),
        ):
            assert sorted(family) == sorted(original)
            for level, matrix in family.items():
                assert_allclose(matrix, original[level][relabel], atol=1e-10)


class TestWideLadders:
    def test_convergence_is_monotone(self, wide_ladders):
        assert wide_ladders.q_convergence.monotone
        assert wide_ladders.l_convergence.monotone

    def test_families(self, wide_ladders):
        assert sorted(wide_ladders.Q_ell) == [-2, -1]
        assert sorted(wide_ladders.L_ell) == [1, 2]
        assert_allclose(wide_ladders.Q.sum(axis=1), 1.0, atol=1e-10)
        assert np.all(wide_ladders.L_inf < 1)

    def test_identities(self, wide_ladders):
        assert wide_ladders.g_row_deviation <= 1e-8
        assert wide_ladders.z_residual <= 1e-10
        assert wide_ladders.w_residual <= 1e-10
        assert wide_ladders.c_inf == pytest.approx(wide_ladders.c_inf_alternate, rel=1e-8)

    def test_karlin_dembo_unsupported(self, wide_ladders):
        assert not wide_ladders.supports_karlin_dembo()
        with pytest.raises(errors.UnsupportedModelError):
            wide_ladders.karlin_dembo_constant()
        assert "K_star" not in wide_ladders.to_report()


class TestFailures:
    def test_no_negative_score(self):
        model = ScoreModel(
            alphabet=["zero", "up"], transition=[[0.5, 0.5], [0.5, 0.5]], scores=[0, 1]
        )

        with pytest.raises(errors.ModelHypothesisError):
            ladder.solve_Q_ladders(model, ladder.score_split(model))

    def test_sweep_cap(self, dna_model):
        with pytest.raises(errors.LadderConvergenceError) as raised:
            ladder.solve_L_ladders(dna_model, ladder.score_split(dna_model), max_sweeps=1)

        assert raised.value.get_exit_code() == errors.EXIT_NUMERIC

    def test_reducible_restriction(self, dna_model):
        with pytest.raises(errors.ReducibleRestrictionError):
            ladder.invariant_vector_z(np.eye(4), partition_states(dna_model))
