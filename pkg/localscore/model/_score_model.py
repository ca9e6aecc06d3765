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

import hashlib
import json
import math
from functools import reduce
from typing import Dict, Sequence, Tuple

import numpy as np

from localscore import errors


class ScoreModel:
    """A finite-state Markov chain with an integer score attached to each state.

    Scores are kept in their original units. When all scores share a common
    divisor d > 1 the model also exposes the rescaled ``lattice_scores`` (the
    scores divided by d); every lattice-indexed computation works on those
    and reports levels multiplied back by ``lattice_step``.

    Instances are immutable: the arrays they expose are read-only.
    """

    def __init__(
        self,
        *,
        alphabet: Sequence[str],
        transition: Sequence[Sequence[float]],
        scores: Sequence[int],
        description: str = ""
    ) -> None:
        self._alphabet = tuple(str(a) for a in alphabet)
        self._description = description

        if not self._alphabet:
            raise errors.ModelStructureError("the alphabet is empty")
        if len(set(self._alphabet)) != len(self._alphabet):
            raise errors.ModelStructureError("the alphabet has repeated states")

        try:
            matrix = np.array(transition, dtype=float)
        except (TypeError, ValueError) as e:
            raise errors.ModelStructureError(
                "the transition matrix is not a numeric table"
            ) from e

        size = len(self._alphabet)
        if matrix.shape != (size, size):
            raise errors.ModelStructureError(
                "the transition matrix has shape {} but the alphabet has {} "
                "states".format(matrix.shape, size)
            )
        if not np.all(np.isfinite(matrix)):
            raise errors.ModelStructureError(
                "the transition matrix has non-finite entries"
            )
        if np.any(matrix < 0):
            raise errors.ModelStructureError(
                "the transition matrix has negative entries"
            )

        if len(scores) != size:
            raise errors.ModelStructureError(
                "{} scores given for {} states".format(len(scores), size)
            )
        raw_scores = np.array(scores)
        if raw_scores.dtype.kind not in "iu" and not np.all(
            np.equal(np.mod(raw_scores, 1), 0)
        ):
            raise errors.ModelStructureError("scores must be integers")

        self._transition = matrix
        self._scores = raw_scores.astype(np.int64)
        self._lattice_step = _lattice_step(self._scores)
        self._lattice_scores = self._scores // self._lattice_step

        for array in (self._transition, self._scores, self._lattice_scores):
            array.setflags(write=False)

    def __repr__(self):
        return "ScoreModel(alphabet={!r}, scores={!r})".format(
            list(self._alphabet), self._scores.tolist()
        )

    def __eq__(self, other):
        if type(other) is type(self):
            return (
                self._alphabet == other._alphabet
                and np.array_equal(self._transition, other._transition)
                and np.array_equal(self._scores, other._scores)
            )

        return NotImplemented

    def __hash__(self):
        return hash(self.digest)

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self._alphabet

    @property
    def description(self) -> str:
        return self._description

    @property
    def size(self) -> int:
        return len(self._alphabet)

    @property
    def transition(self) -> np.ndarray:
        return self._transition

    @property
    def scores(self) -> np.ndarray:
        """Scores in original units."""
        return self._scores

    @property
    def lattice_step(self) -> int:
        """The lattice step d, i.e. the gcd of the scores."""
        return self._lattice_step

    @property
    def lattice_scores(self) -> np.ndarray:
        """Scores divided by the lattice step."""
        return self._lattice_scores

    @property
    def u_max(self) -> int:
        """Largest magnitude of a negative score, in lattice units."""
        negative = self._lattice_scores[self._lattice_scores < 0]
        return int(-negative.min()) if negative.size else 0

    @property
    def v_max(self) -> int:
        """Largest positive score, in lattice units."""
        positive = self._lattice_scores[self._lattice_scores > 0]
        return int(positive.max()) if positive.size else 0

    @property
    def max_abs_score(self) -> int:
        return int(np.abs(self._scores).max())

    @property
    def digest(self) -> str:
        """A sha256 hash of the canonical model content."""
        canonical = json.dumps(
            {
                "alphabet": list(self._alphabet),
                "transition": [[float(p).hex() for p in row] for row in self._transition],
                "scores": self._scores.tolist(),
            },
            sort_keys=True,
        )
        return hashlib.sha256(canonical.encode()).hexdigest()

    def index(self, state: str) -> int:
        try:
            return self._alphabet.index(state)
        except ValueError:
            raise errors.ModelStructureError(
                "unknown state {!r}".format(state)
            ) from None

    def score_of(self, state: str) -> int:
        return int(self._scores[self.index(state)])

    def permuted(self, order: Sequence[int]) -> "ScoreModel":
        """Return the same model with its states relabeled in ``order``.

        :param list order: new position i holds old state ``order[i]``.
        """
        order = list(order)
        if sorted(order) != list(range(self.size)):
            raise errors.ModelStructureError(
                "{!r} is not a permutation of the states".format(order)
            )
        return ScoreModel(
            alphabet=[self._alphabet[i] for i in order],
            transition=self._transition[np.ix_(order, order)],
            scores=self._scores[order],
            description=self._description,
        )

    def to_document(self) -> Dict[str, object]:
        document = dict()  # type: Dict[str, object]
        if self._description:
            document["description"] = self._description
        document["alphabet"] = list(self._alphabet)
        document["transition"] = self._transition.tolist()
        document["scores"] = self._scores.tolist()
        return document


class StatePartition:
    """States split by the sign of their score."""

    def __init__(self, model: ScoreModel) -> None:
        scores = model.scores
        self.negative = np.flatnonzero(scores < 0)
        self.zero = np.flatnonzero(scores == 0)
        self.positive = np.flatnonzero(scores > 0)
        self.negative_states = tuple(model.alphabet[i] for i in self.negative)
        self.zero_states = tuple(model.alphabet[i] for i in self.zero)
        self.positive_states = tuple(model.alphabet[i] for i in self.positive)

    def __repr__(self):
        return "StatePartition(negative={!r}, zero={!r}, positive={!r})".format(
            self.negative_states, self.zero_states, self.positive_states
        )


def partition_states(model: ScoreModel) -> StatePartition:
    return StatePartition(model)


def _lattice_step(scores: np.ndarray) -> int:
    nonzero = [abs(int(s)) for s in scores if s != 0]
    if not nonzero:
        return 1
    return reduce(math.gcd, nonzero)
