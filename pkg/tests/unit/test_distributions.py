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

import numpy as np
import pytest
from numpy.testing import assert_allclose

from localscore import distributions, errors
from localscore.distributions import DistributionTable, Statistic
from localscore.model import stationary_distribution

THETA = math.log(7 / 3)
K_STAR = 24 / 245


@pytest.fixture(scope="module")
def iid_splus(iid_ladders):
    return distributions.exact_splus_cdf(iid_ladders.model, iid_ladders, 40)


@pytest.fixture(scope="module")
def dna_splus(dna_ladders):
    return distributions.exact_splus_cdf(dna_ladders.model, dna_ladders, 60)


class TestTable:
    def test_shape_is_checked(self):
        with pytest.raises(ValueError):
            DistributionTable(
                statistic=Statistic.S_PLUS,
                levels=[0, 1, 2],
                values=np.zeros((2, 2)),
                states=["a", "b"],
            )

    def test_column_out_of_range(self, iid_splus):
        with pytest.raises(errors.LevelRangeError):
            iid_splus.column(41)
        with pytest.raises(errors.LevelRangeError):
            iid_splus.tail(-1)

    def test_mixture(self, dna_ladders, dna_splus):
        pi = stationary_distribution(dna_ladders.model)

        assert_allclose(dna_splus.mixture(pi), pi @ dna_splus.values)
        with pytest.raises(ValueError):
            dna_splus.mixture([1.0])


class TestSplus:
    def test_iid_closed_form(self, iid_splus):
        k = np.arange(41)
        expected = 1 - (3 / 7) ** (k + 1)

        assert_allclose(iid_splus.values, np.vstack([expected, expected]), atol=1e-8)
        assert_allclose(iid_splus.survival[0], (3 / 7) ** (k + 1), atol=1e-8)
        assert iid_splus.levels[-1] == 40
        assert iid_splus.metadata["level_max"] == 40

    def test_iid_asymptotic_is_exact(self, iid_ladders):
        for k in (0, 3, 12):
            tail = distributions.splus_tail_asymptotic(
                iid_ladders.spectral, iid_ladders, k
            )
            assert_allclose(tail, [(3 / 7) ** (k + 1)] * 2, atol=1e-8)

    def test_dna_cdf_is_monotone(self, dna_splus):
        assert np.all(np.diff(dna_splus.values, axis=1) >= -1e-15)
        assert np.all(dna_splus.values <= 1.0)
        assert np.all(dna_splus.values[:, 0] > 0)

    def test_dna_tail_reaches_plateau(self, dna_ladders, dna_splus):
        k = 40
        plateau = (
            math.exp(dna_ladders.theta_star * k)
            * dna_splus.tail(k)
            / dna_ladders.u_star
        )

        assert_allclose(plateau, dna_ladders.c_inf, rtol=1e-3)
        asymptotic = distributions.splus_tail_asymptotic(
            dna_ladders.spectral, dna_ladders, k
        )
        assert_allclose(asymptotic, dna_splus.tail(k), rtol=1e-3)

    def test_negative_level_max(self, dna_ladders):
        with pytest.raises(ValueError):
            distributions.exact_splus_cdf(dna_ladders.model, dna_ladders, -1)

    def test_default_level_max(self, iid_ladders):
        level = distributions.default_level_max(iid_ladders, 100)

        assert level == math.ceil(math.log(100) / THETA) + 1 + 20

    def test_unknown_tail_source(self, iid_ladders, iid_splus):
        with pytest.raises(ValueError):
            distributions.survival_function(iid_ladders, iid_splus, tail="cached")


class TestQ1:
    def test_iid_closed_form(self, iid_ladders, iid_splus):
        table = distributions.q1_tail(iid_ladders.model, iid_ladders, iid_splus, 20)
        k = np.arange(21)
        expected = (4 / 7) * (3 / 7) ** (k + 1)

        assert_allclose(table.values, np.vstack([expected, expected]), atol=1e-8)
        assert table.metadata["clamped"] == 0

    def test_asymptotic_tails_agree_for_iid(self, iid_ladders, iid_splus):
        exact = distributions.q1_tail(iid_ladders.model, iid_ladders, iid_splus, 10)
        asymptotic = distributions.q1_tail(
            iid_ladders.model, iid_ladders, None, 10, tail="asymptotic"
        )

        assert_allclose(asymptotic.values, exact.values, atol=1e-8)

    def test_table_too_short(self, iid_ladders, iid_splus):
        with pytest.raises(errors.LevelRangeError):
            distributions.q1_tail(iid_ladders.model, iid_ladders, iid_splus, 40)

    def test_dna_values_are_probabilities(self, dna_ladders, dna_splus):
        table = distributions.q1_tail(dna_ladders.model, dna_ladders, dna_splus, 30)

        assert np.all(table.values >= 0) and np.all(table.values <= 1)

    def test_bounded_by_splus_tail(self, dna_ladders, dna_splus):
        table = distributions.q1_tail(dna_ladders.model, dna_ladders, dna_splus, 30)

        assert np.all(table.values <= dna_splus.survival[:, :31])


class TestKarlinDemboQ1:
    def test_iid_closed_form(self, iid_ladders):
        table = distributions.kd_q1_tail(iid_ladders, 20)
        k = np.arange(21)
        expected = (4 / 7) * (3 / 7) ** (k + 1)

        assert_allclose(table.values, np.vstack([expected, expected]), atol=1e-8)
        assert table.metadata["tail"] == "karlin-dembo"

    def test_matches_asymptotic_tail_source(self, dna_ladders):
        kd = distributions.kd_q1_tail(dna_ladders, 15)
        asymptotic = distributions.q1_tail(
            dna_ladders.model, dna_ladders, None, 15, tail="asymptotic"
        )

        assert_allclose(kd.values[:, 1:], asymptotic.values[:, 1:], rtol=1e-10)

    def test_close_to_exact_tail_source(self, dna_ladders, dna_splus):
        kd = distributions.kd_q1_tail(dna_ladders, 30)
        exact = distributions.q1_tail(dna_ladders.model, dna_ladders, dna_splus, 30)

        assert_allclose(kd.values[:, 6:11], exact.values[:, 6:11], rtol=0.2)
        assert_allclose(kd.values[:, 25:], exact.values[:, 25:], rtol=0.01)

    def test_constant_is_positive(self, wide_ladders):
        assert np.all(distributions.kd_q1_constant(wide_ladders) > 0)


class TestMn:
    def test_level(self, iid_ladders):
        assert distributions.mn_level(iid_ladders, 100, 0.0) == math.floor(
            math.log(100) / THETA
        )
        assert distributions.mn_level(iid_ladders, 10, -20.0) < 0

    def test_iid_statement_variant(self, iid_ladders, iid_splus):
        n, x = 100, 0.5
        m = distributions.mn_level(iid_ladders, n, x)
        expected = math.exp(-(n / 2.5) * (4 / 7) * (3 / 7) ** (m + 1))

        values = distributions.mn_cdf_approx(
            iid_ladders.model, iid_ladders, iid_splus, n, x
        )

        assert_allclose(values, [expected, expected], atol=1e-8)

    def test_iid_proof_variant(self, iid_ladders, iid_splus):
        n, x = 100, -1.0
        m = distributions.mn_level(iid_ladders, n, x)
        expected = math.exp(-(n / 2.5) * (3 / 7) ** (m + 1) + (3 / 7) ** (m + 2))

        values = distributions.mn_cdf_approx(
            iid_ladders.model, iid_ladders, iid_splus, n, x, variant="proof"
        )

        assert values[0] == pytest.approx(expected, abs=1e-8)

    def test_curve_rises_with_x(self, dna_ladders, dna_splus):
        grid = np.arange(-10.0, 6.5, 0.5)
        curve = distributions.mn_cdf_curve(
            dna_ladders.model, dna_ladders, dna_splus, 100, grid
        )

        row = curve.values[0]
        assert row[-1] > row[0]
        assert np.all(np.diff(row) >= 0)
        assert np.all((row >= 0) & (row <= 1))
        assert curve.metadata["n"] == 100
        assert curve.metadata["variant"] == "statement"

    def test_floored_levels_are_counted(self, iid_ladders, iid_splus):
        curve = distributions.mn_cdf_curve(
            iid_ladders.model, iid_ladders, iid_splus, 10, [-20.0, 0.0]
        )

        assert curve.metadata["floored"] == 1

    def test_bad_arguments(self, iid_ladders, iid_splus):
        model = iid_ladders.model
        with pytest.raises(ValueError):
            distributions.mn_cdf_approx(model, iid_ladders, iid_splus, 1, 0.0)
        with pytest.raises(ValueError):
            distributions.mn_cdf_approx(
                model, iid_ladders, iid_splus, 100, 0.0, variant="unknown"
            )

    def test_table_too_short(self, iid_ladders):
        short = distributions.exact_splus_cdf(iid_ladders.model, iid_ladders, 3)

        with pytest.raises(errors.LevelRangeError):
            distributions.mn_cdf_approx(iid_ladders.model, iid_ladders, short, 1000, 2.0)

    def test_karlin_dembo(self, iid_ladders):
        for x in (-2.0, 0.0, 3.0):
            value = distributions.kd_mn_approx(iid_ladders.spectral, iid_ladders, 100, x)
            assert value == pytest.approx(
                math.exp(-K_STAR * math.exp(-THETA * x)), abs=1e-8
            )
        curve = distributions.kd_mn_curve(
            iid_ladders.spectral, iid_ladders, 100, [-2.0, 0.0]
        )
        assert curve[1] == pytest.approx(math.exp(-K_STAR), abs=1e-8)

    def test_karlin_dembo_unsupported(self, wide_ladders):
        with pytest.raises(errors.UnsupportedModelError):
            distributions.kd_mn_approx(wide_ladders.spectral, wide_ladders, 100, 0.0)


class TestPValue:
    def test_iid(self, iid_ladders, iid_splus):
        n, score = 100, 10
        report = distributions.pvalue(iid_ladders.model, iid_ladders, iid_splus, n, score)
        m = distributions.mn_level(iid_ladders, n, report.x)

        assert report.x == pytest.approx(score - math.log(n) / THETA)
        assert report.improved == pytest.approx(
            1 - math.exp(-(n / 2.5) * (4 / 7) * (3 / 7) ** (m + 1)), abs=1e-8
        )
        assert report.kd == pytest.approx(
            1 - math.exp(-K_STAR * math.exp(-THETA * report.x)), abs=1e-8
        )
        assert report.to_dict()["observed_score"] == score

    def test_unsupported_baseline_is_none(self, wide_ladders):
        splus = distributions.exact_splus_cdf(wide_ladders.model, wide_ladders, 40)
        report = distributions.pvalue(wide_ladders.model, wide_ladders, splus, 100, 6)

        assert report.kd is None
        assert 0 <= report.improved <= 1

    def test_negative_score(self, iid_ladders, iid_splus):
        with pytest.raises(ValueError):
            distributions.pvalue(iid_ladders.model, iid_ladders, iid_splus, 100, -1)
