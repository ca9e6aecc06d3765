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

from typing import List, Optional

from localscore import errors


class Step:
    def __init__(self, name: str, description: str) -> None:
        self.name = name
        self.description = description
        self.__order = None  # type: Optional[int]

    @property
    def _order(self) -> int:
        if self.__order is None:
            try:
                self.__order = STEPS.index(self)
            except ValueError:
                raise errors.InvalidStepError(self.name)
        return self.__order

    def previous_steps(self) -> List["Step"]:
        return STEPS[: self._order]

    def __eq__(self, other) -> bool:
        if type(other) is type(self):
            return self.name == other.name

        return NotImplemented

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "Step({!r})".format(self.name)


# Every analysis runs these in order; a step needs all the earlier ones.
VALIDATE = Step("validate", "Checking model hypotheses")
SPECTRAL = Step("spectral", "Solving rho(theta) = 1")
LADDERS = Step("ladders", "Solving ladder systems")
DISTRIBUTIONS = Step("distributions", "Computing the S+ distribution")

STEPS = [VALIDATE, SPECTRAL, LADDERS, DISTRIBUTIONS]
