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

from ._perron import OVERFLOW_GUARD  # noqa: F401
from ._perron import dominant_eigenpair  # noqa: F401
from ._perron import phi_matrix  # noqa: F401
from ._theta import SpectralData  # noqa: F401
from ._theta import check_rho_prime_zero  # noqa: F401
from ._theta import log_convexity_defect  # noqa: F401
from ._theta import rho_grid  # noqa: F401
from ._theta import solve_theta_star  # noqa: F401
from ._theta import spectral_radius  # noqa: F401
