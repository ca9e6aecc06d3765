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

# Data/methods shared across localscore modules

import logging
import os

_DEFAULT_SCHEMADIR = os.path.join(os.path.dirname(__file__), "schema")
_schemadir = _DEFAULT_SCHEMADIR

_THREADS_ENVVAR = "LOCALSCORE_THREADS"

logger = logging.getLogger(__name__)


def set_schemadir(schemadir):
    global _schemadir
    _schemadir = schemadir


def get_schemadir():
    return _schemadir


def get_thread_count() -> int:
    """Return the default number of Monte Carlo workers.

    The value comes from the LOCALSCORE_THREADS environment variable and
    falls back to the number of available processors.
    """
    value = os.environ.get(_THREADS_ENVVAR, "")
    if value:
        try:
            count = int(value)
        except ValueError:
            logger.warning(
                "Ignoring {}={!r}: not an integer".format(_THREADS_ENVVAR, value)
            )
        else:
            if count >= 1:
                return count
            logger.warning(
                "Ignoring {}={!r}: must be at least 1".format(_THREADS_ENVVAR, value)
            )

    return os.cpu_count() or 1
