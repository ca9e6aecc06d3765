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

from ._rng import BATCH_SIZE  # noqa: F401
from ._rng import GENERATOR  # noqa: F401
from ._rng import block_generator  # noqa: F401
from ._config import SAFETY_HORIZON  # noqa: F401
from ._config import STATIONARY_START  # noqa: F401
from ._config import PassageReport  # noqa: F401
from ._config import SimulationConfig  # noqa: F401
from ._config import SimulationReport  # noqa: F401
from ._config import SimulationStatistic  # noqa: F401
from ._paths import TransitionSampler  # noqa: F401
from ._paths import brute_force_local_score  # noqa: F401
from ._paths import lindley_local_score  # noqa: F401
from ._paths import lindley_of_increments  # noqa: F401
from ._paths import simulate_path  # noqa: F401
from ._empirical import empirical_first_ascent  # noqa: F401
from ._empirical import empirical_first_descent  # noqa: F401
from ._empirical import empirical_ladder_epochs  # noqa: F401
from ._empirical import empirical_mn  # noqa: F401
from ._empirical import empirical_q1  # noqa: F401
from ._empirical import empirical_splus  # noqa: F401
