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

from ._table import DistributionTable  # noqa: F401
from ._table import Statistic  # noqa: F401
from ._splus import default_level_max  # noqa: F401
from ._splus import exact_splus_cdf  # noqa: F401
from ._splus import splus_tail_asymptotic  # noqa: F401
from ._splus import survival_function  # noqa: F401
from ._q1 import kd_q1_constant  # noqa: F401
from ._q1 import kd_q1_tail  # noqa: F401
from ._q1 import q1_tail  # noqa: F401
from ._mn import kd_mn_approx  # noqa: F401
from ._mn import kd_mn_curve  # noqa: F401
from ._mn import mn_cdf_approx  # noqa: F401
from ._mn import mn_cdf_curve  # noqa: F401
from ._mn import mn_level  # noqa: F401
from ._pvalue import PValueReport  # noqa: F401
from ._pvalue import pvalue  # noqa: F401
