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

import csv
import json
import math
import os

import pytest

from localscore.cli import RunManifest, format_value, run
from localscore.model import load_model

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
IID = os.path.join(ROOT, "model-iid.yaml")
DNA = os.path.join(ROOT, "model-dna.yaml")


def _rows(path):
    with open(path) as f:
        return list(csv.DictReader(f))


def _json(path):
    with open(path) as f:
        return json.load(f)


@pytest.fixture
def out(tmp_path):
    return str(tmp_path / "out")


@pytest.fixture
def wide_file(tmp_path):
    path = tmp_path / "wide.yaml"
    path.write_text(
        "alphabet: [a, b, c, d]\n"
        "transition:\n"
        "  - [0.3, 0.3, 0.2, 0.2]\n"
        "  - [0.4, 0.2, 0.3, 0.1]\n"
        "  - [0.25, 0.35, 0.25, 0.15]\n"
        "  - [0.35, 0.35, 0.2, 0.1]\n"
        "scores: [-2, -1, 1, 2]\n"
    )
    return str(path)


def test_format_value():
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(3) == "3"
    assert format_value(None) == ""
    assert format_value(True) == "true"


class TestValidate:
    def test_passes_and_records_manifest(self, out):
        assert run(["--output-dir", out, "validate", IID]) == 0

        assert _json(os.path.join(out, "validation.json"))["passed"] is True
        manifest = RunManifest.load(filepath=os.path.join(out, "validate-manifest.yaml"))
        assert manifest.command == "validate"
        assert manifest.argv == ["validate", IID]
        assert manifest.model == load_model(IID).digest
        assert manifest.outputs == [os.path.join(out, "validation.json")]

    def test_failure_exit_code(self, out, tmp_path):
        path = tmp_path / "drift.yaml"
        path.write_text(
            "alphabet: [down, up]\n"
            "transition: [[0.3, 0.7], [0.3, 0.7]]\n"
            "scores: [-1, 1]\n"
        )

        assert run(["--output-dir", out, "validate", str(path)]) == 2
        assert _json(os.path.join(out, "validation.json"))["passed"] is False

    def test_missing_model(self, out, tmp_path):
        assert run(["--output-dir", out, "validate", str(tmp_path / "none.yaml")]) == 1


class TestAnalysisCommands:
    def test_spectral(self, out):
        assert run(["--output-dir", out, "spectral", IID]) == 0

        document = _json(os.path.join(out, "spectral.json"))
        assert document["theta_star"] == pytest.approx(math.log(7 / 3), abs=1e-10)
        assert document["log_convexity_defect"] >= -1e-9
        assert len(_rows(os.path.join(out, "rho-grid.csv"))) == 61

    def test_ladders(self, out):
        assert run(["--output-dir", out, "ladders", IID]) == 0

        document = _json(os.path.join(out, "ladders.json"))
        assert document["A_star"] == pytest.approx(2.5, abs=1e-8)
        assert document["c_inf"] == pytest.approx(6 / 7, abs=1e-8)
        for name in ("ladder-Q-1.csv", "ladder-L1.csv", "ladder-Ginf.csv"):
            assert os.path.exists(os.path.join(out, name))
        row = _rows(os.path.join(out, "ladder-L1.csv"))[0]
        assert float(row["up"]) == pytest.approx(3 / 7, abs=1e-8)

    def test_splus(self, out):
        assert run(["--output-dir", out, "splus", IID, "--max-level", "10"]) == 0

        exact = _rows(os.path.join(out, "splus-exact.csv"))
        asymptotic = _rows(os.path.join(out, "splus-asymptotic.csv"))
        assert len(exact) == 11
        for k in (0, 3, 10):
            assert float(exact[k]["mixture"]) == pytest.approx(
                1 - (3 / 7) ** (k + 1), abs=1e-8
            )
            assert float(asymptotic[k]["down"]) == pytest.approx(
                float(exact[k]["down"]), abs=1e-8
            )

    def test_q1(self, out):
        assert run(["--output-dir", out, "q1", IID, "--max-level", "5"]) == 0

        rows = _rows(os.path.join(out, "q1-tail.csv"))
        assert float(rows[2]["up"]) == pytest.approx((4 / 7) * (3 / 7) ** 3, abs=1e-8)

    def test_mn_with_baseline(self, out):
        args = ["mn", DNA, "--n", "100", "--x-min", "-2", "--x-max", "2"]
        assert run(["--output-dir", out] + args) == 0

        rows = _rows(os.path.join(out, "mn-cdf.csv"))
        assert len(rows) == 9
        assert set(rows[0]) == {"x", "level", "improved", "kd"}
        assert 0 < float(rows[-1]["improved"]) <= 1

    def test_mn_without_baseline(self, out, wide_file):
        assert run(["--output-dir", out, "mn", wide_file, "--n", "100"]) == 0

        rows = _rows(os.path.join(out, "mn-cdf.csv"))
        assert "kd" not in rows[0]
        assert len(rows) == 33

    def test_bad_grid(self, out):
        assert run(["--output-dir", out, "mn", IID, "--n", "100", "--x-step", "0"]) == 1

    def test_horizon_must_exceed_one(self, out):
        with pytest.raises(SystemExit):
            run(["--output-dir", out, "mn", IID, "--n", "1"])

    def test_pvalue(self, out):
        assert run(["--output-dir", out, "pvalue", IID, "--n", "100", "--score", "8"]) == 0

        document = _json(os.path.join(out, "pvalue.json"))
        assert 0 < document["improved"] < 1
        assert 0 < document["kd"] < 1
        assert document["observed_score"] == 8


class TestSimulationCommands:
    def test_simulate_splus(self, out):
        args = ["simulate", IID, "--what", "splus", "--n", "50", "--reps", "2000"]
        assert run(["--output-dir", out] + args + ["--seed", "4"]) == 0

        rows = _rows(os.path.join(out, "simulate-splus.csv"))
        assert set(rows[0]) == {"level", "estimate", "se", "tail_bound"}
        assert float(rows[0]["estimate"]) == pytest.approx(4 / 7, abs=0.05)
        manifest = RunManifest.load(filepath=os.path.join(out, "simulate-manifest.yaml"))
        assert manifest.seeds == [4]

    def test_simulate_ladder(self, out):
        args = ["simulate", IID, "--what", "ladder", "--n", "200"]
        assert run(["--output-dir", out] + args) == 0

        assert _json(os.path.join(out, "simulate-ladder.json"))["mean"] == pytest.approx(
            2.5, rel=0.2
        )

    def test_compare_splus(self, out):
        args = ["compare", IID, "--figure", "splus", "--n", "50", "--reps", "2000"]
        assert run(["--output-dir", out] + args + ["--max-level", "6"]) == 0

        rows = _rows(os.path.join(out, "compare-splus.csv"))
        assert len(rows) == 7
        assert set(rows[0]) == {
            "level",
            "exact",
            "asymptotic",
            "monte_carlo",
            "se",
            "tail_bound",
        }

    def test_compare_q1_reports_karlin_dembo(self, out):
        args = ["compare", DNA, "--figure", "q1", "--n", "200", "--reps", "1000"]
        assert run(["--output-dir", out] + args + ["--max-level", "5"]) == 0

        rows = _rows(os.path.join(out, "compare-q1.csv"))
        assert len(rows) == 6
        assert set(rows[0]) == {"level", "approx", "kd", "monte_carlo", "se"}
        assert all(0.0 < float(row["kd"]) for row in rows)

    def test_compare_mn_n(self, out):
        args = ["compare", DNA, "--figure", "mn-n", "--reps", "500"]
        assert run(["--output-dir", out] + args + ["--n-values", "50", "100"]) == 0

        rows = _rows(os.path.join(out, "compare-mn-n.csv"))
        assert [row["n"] for row in rows] == ["50", "100"]
        manifest = RunManifest.load(filepath=os.path.join(out, "compare-manifest.yaml"))
        assert manifest.seeds == [0, 0]


class TestEstimateAndReplay:
    def test_estimate(self, out, tmp_path):
        sequence = tmp_path / "seq.fa"
        sequence.write_text(">sample\nACGTACGTTAGGCATTACGA\n")
        args = ["estimate", str(sequence), "--scores", "-1", "-1", "0", "1"]

        assert run(["--output-dir", out] + args + ["--pseudocount", "1"]) == 0

        model = load_model(os.path.join(out, "model.yaml"))
        assert model.alphabet == ("A", "C", "G", "T")
        assert model.scores.tolist() == [-1, -1, 0, 1]

    def test_replay_is_identical(self, out, tmp_path):
        assert run(["--output-dir", out, "splus", DNA, "--max-level", "12"]) == 0
        replayed = str(tmp_path / "replayed")

        manifest = os.path.join(out, "splus-manifest.yaml")
        assert run(["--output-dir", replayed, "replay", manifest]) == 0

        for name in ("splus-exact.csv", "splus-asymptotic.csv"):
            with open(os.path.join(out, name), "rb") as original:
                with open(os.path.join(replayed, name), "rb") as again:
                    assert original.read() == again.read()

    def test_replay_missing_manifest(self, out, tmp_path):
        assert run(["--output-dir", out, "replay", str(tmp_path / "none.yaml")]) == 1

    def test_replay_malformed_manifest(self, out, tmp_path):
        manifest = tmp_path / "broken.yaml"
        manifest.write_text("!RunManifest\nassets: [unclosed\n")

        assert run(["--output-dir", out, "replay", str(manifest)]) == 1

    def test_manifest_argv_skips_option_values(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert run(["--output-dir", "splus", "splus", IID, "--max-level", "3"]) == 0

        path = tmp_path / "splus" / "splus-manifest.yaml"
        manifest = RunManifest.load(filepath=str(path))
        assert manifest.argv == ["splus", IID, "--max-level", "3"]
