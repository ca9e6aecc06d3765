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

from ._score_model import ScoreModel  # noqa: F401
from ._score_model import StatePartition  # noqa: F401
from ._score_model import partition_states  # noqa: F401
from ._markov import is_irreducible  # noqa: F401
from ._markov import mean_score  # noqa: F401
from ._markov import period  # noqa: F401
from ._markov import stationary_distribution  # noqa: F401
from ._markov import stationary_vector  # noqa: F401
from ._validation import ValidationCheck  # noqa: F401
from ._validation import ValidationReport  # noqa: F401
from ._validation import validate_model  # noqa: F401
from ._estimate import estimate_from_sequence  # noqa: F401
from ._estimate import model_from_sequence  # noqa: F401
from ._estimate import read_sequence  # noqa: F401
from ._loader import dump_model  # noqa: F401
from ._loader import load_model  # noqa: F401
from ._loader import model_from_document  # noqa: F401
