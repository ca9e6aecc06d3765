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

"""Random streams for the simulation oracle.

Replicates are simulated in blocks of ``batch_size``. Block b draws from
PCG64 seeded by SeedSequence(seed, spawn_key=(b,)), so a block's stream
depends only on the master seed and the block index, never on which worker
runs it or in what order.
"""

from typing import List

import numpy as np

GENERATOR = "PCG64"
BATCH_SIZE = 4096


def block_generator(seed: int, block: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=(block,))
    return np.random.Generator(np.random.PCG64(sequence))


def block_sizes(replicates: int, batch_size: int = BATCH_SIZE) -> List[int]:
    full, rest = divmod(replicates, batch_size)
    return [batch_size] * full + ([rest] if rest else [])
