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
import os

import pytest

from localscore import ladder, spectral
from localscore.model import ScoreModel, load_model

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

P_UP = 0.3
THETA_IID = math.log(7 / 3)


def _iid_model():
    return ScoreModel(
        alphabet=["down", "up"],
        transition=[[0.7, 0.3], [0.7, 0.3]],
        scores=[-1, 1],
    )


def _dna_model():
    sixth = 1 / 6
    return ScoreModel(
        alphabet=["A", "C", "G", "T"],
        transition=[
            [0.5, sixth, sixth, sixth],
            [0.25, 0.25, 0.25, 0.25],
            [sixth, sixth, sixth, 0.5],
            [sixth, sixth, 0.5, sixth],
        ],
        scores=[-1, -1, 0, 1],
    )


def _wide_model():
    return ScoreModel(
        alphabet=["a", "b", "c", "d"],
        transition=[
            [0.3, 0.3, 0.2, 0.2],
            [0.4, 0.2, 0.3, 0.1],
            [0.25, 0.35, 0.25, 0.15],
            [0.35, 0.35, 0.2, 0.1],
        ],
        scores=[-2, -1, 1, 2],
    )


@pytest.fixture
def iid_model():
    """The +-1 walk with P(+1) = 0.3."""
    return _iid_model()


@pytest.fixture
def dna_model():
    return _dna_model()


@pytest.fixture
def wide_model():
    """Scores in {-2, -1, 1, 2}, so u_max = v_max = 2."""
    return _wide_model()


@pytest.fixture
def bundled_models():
    return {
        "iid": load_model(os.path.join(ROOT, "model-iid.yaml")),
        "dna": load_model(os.path.join(ROOT, "model-dna.yaml")),
    }


@pytest.fixture(scope="session")
def iid_ladders():
    model = _iid_model()
    return ladder.solve_ladder_system(model, spectral.solve_theta_star(model))


@pytest.fixture(scope="session")
def dna_ladders():
    model = _dna_model()
    return ladder.solve_ladder_system(model, spectral.solve_theta_star(model))


@pytest.fixture(scope="session")
def wide_ladders():
    model = _wide_model()
    return ladder.solve_ladder_system(model, spectral.solve_theta_star(model))
