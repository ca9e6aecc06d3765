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

"""Finite tuple sets used by the ladder recursions.

After a first step that leaves the walk at ``start`` on the wrong side of
zero, the walk returns through a sequence of ladder passages. Each passage
moves it by some t in ``steps``; the sequence stops the first time the
level crosses to the target side. The sets are finite because every
passage moves at least one lattice unit toward the target.
"""

import functools
from typing import Dict, Tuple

Tuples = Tuple[Tuple[int, ...], ...]


@functools.lru_cache(maxsize=None)
def descent_tuples(start: int, u_max: int) -> Tuples:
    """Passage sequences from a level ``start`` >= 0 down below zero.

    Each t lies in [-u_max, -1]; partial levels stay >= 0 until the last
    passage, which lands strictly below zero.
    """
    if start < 0 or u_max < 1:
        return ()
    return tuple(_enumerate(start, tuple(range(-u_max, 0)), _below_zero))


@functools.lru_cache(maxsize=None)
def ascent_tuples(start: int, v_max: int) -> Tuples:
    """Passage sequences from a level ``start`` <= 0 up above zero.

    Each t lies in [1, v_max]; partial levels stay <= 0 until the last
    passage, which lands strictly above zero.
    """
    if start > 0 or v_max < 1:
        return ()
    return tuple(_enumerate(start, tuple(range(1, v_max + 1)), _above_zero))


def group_by_landing(start: int, tuples: Tuples) -> Dict[int, Tuples]:
    """Group passage sequences by the level they end on."""
    groups = dict()  # type: Dict[int, list]
    for sequence in tuples:
        groups.setdefault(start + sum(sequence), []).append(sequence)
    return {level: tuple(group) for level, group in sorted(groups.items())}


def _below_zero(level: int) -> bool:
    return level < 0


def _above_zero(level: int) -> bool:
    return level > 0


def _enumerate(start, steps, crossed):
    stack = [(start, ())]
    while stack:
        level, prefix = stack.pop()
        for t in steps:
            sequence = prefix + (t,)
            if crossed(level + t):
                yield sequence
            else:
                stack.append((level + t, sequence))
