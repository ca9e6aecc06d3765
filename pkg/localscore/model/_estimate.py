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

import logging
from typing import Iterable, List, Sequence

import numpy as np

from localscore import errors
from localscore.model._score_model import ScoreModel

logger = logging.getLogger(__name__)


def read_sequence(path: str) -> List[str]:
    """Read a one-letter-per-symbol sequence from a plain or FASTA file.

    Header lines starting with '>' are skipped and whitespace is ignored.
    """
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise errors.ModelFileError(path, e.strerror or str(e)) from e

    symbols = []  # type: List[str]
    for line in lines:
        if line.startswith(">"):
            continue
        symbols.extend(c for c in line if not c.isspace())
    return symbols


def estimate_from_sequence(
    sequence: Sequence[str], alphabet: Sequence[str], pseudocount: float = 0.0
) -> np.ndarray:
    """Estimate a transition matrix from consecutive symbol pairs.

    p(a, b) = (count(ab) + pseudocount) / (count(a.) + r * pseudocount)

    :raises errors.SequenceInputError: on short sequences, unknown symbols
                                       or a negative pseudocount.
    :raises errors.EstimationError: when a row has no observation and no
                                    pseudocount.
    """
    if pseudocount < 0:
        raise errors.SequenceInputError(
            "pseudocount must be nonnegative, got {!r}".format(pseudocount)
        )
    if len(sequence) < 2:
        raise errors.SequenceInputError(
            "at least two symbols are needed, got {}".format(len(sequence))
        )

    positions = {symbol: i for i, symbol in enumerate(alphabet)}
    unknown = sorted(set(sequence) - set(positions))
    if unknown:
        raise errors.SequenceInputError(
            "symbols {!r} are not in the alphabet {!r}".format(unknown, list(alphabet))
        )

    indices = np.fromiter((positions[s] for s in sequence), dtype=np.int64)
    size = len(alphabet)
    counts = np.zeros((size, size))
    np.add.at(counts, (indices[:-1], indices[1:]), 1.0)

    totals = counts.sum(axis=1) + size * pseudocount
    for i, total in enumerate(totals):
        if total == 0:
            raise errors.EstimationError(alphabet[i])

    logger.debug(
        "Estimated transitions from {} pairs with pseudocount {!r}".format(
            len(sequence) - 1, pseudocount
        )
    )
    return (counts + pseudocount) / totals[:, None]


def model_from_sequence(
    sequence: Sequence[str],
    *,
    alphabet: Sequence[str],
    scores: Iterable[int],
    pseudocount: float = 0.0
) -> ScoreModel:
    transition = estimate_from_sequence(sequence, alphabet, pseudocount)
    return ScoreModel(
        alphabet=alphabet,
        transition=transition,
        scores=list(scores),
        description="estimated from {} symbols".format(len(sequence)),
    )
