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

from ._split import ScoreSplitMatrices  # noqa: F401
from ._split import score_split  # noqa: F401
from ._tuples import ascent_tuples  # noqa: F401
from ._tuples import descent_tuples  # noqa: F401
from ._tuples import group_by_landing  # noqa: F401
from ._solver import SOLVER_TOLERANCE  # noqa: F401
from ._solver import ConvergenceInfo  # noqa: F401
from ._solver import LadderSolution  # noqa: F401
from ._solver import solve_L_ladders  # noqa: F401
from ._solver import solve_Q_ladders  # noqa: F401
from ._invariants import g_matrices  # noqa: F401
from ._invariants import invariant_vector_w  # noqa: F401
from ._invariants import invariant_vector_z  # noqa: F401
from ._constants import a_star  # noqa: F401
from ._constants import c_infinity  # noqa: F401
from ._constants import c_infinity_forms  # noqa: F401
from ._constants import constant_c  # noqa: F401
from ._constants import expected_descent  # noqa: F401
from ._constants import karlin_dembo_constant  # noqa: F401
from ._system import LadderSystem  # noqa: F401
from ._system import solve_ladder_system  # noqa: F401
