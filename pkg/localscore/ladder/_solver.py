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
from typing import Callable, Dict, Iterable, NamedTuple

import numpy as np

from localscore import errors
from localscore.model import ScoreModel
from localscore.ladder._split import ScoreSplitMatrices
from localscore.ladder._tuples import (
    Tuples,
    ascent_tuples,
    descent_tuples,
    group_by_landing,
)

logger = logging.getLogger(__name__)

SOLVER_TOLERANCE = 1e-12
MAX_SWEEPS = 1000000

# Allowed decrease between sweeps before iterates count as non-monotone.
_MONOTONE_SLACK = 1e-14

Family = Dict[int, np.ndarray]


class ConvergenceInfo(NamedTuple):
    family: str
    iterations: int
    residual: float
    monotone: bool


class LadderSolution(NamedTuple):
    family: Family
    total: np.ndarray
    info: ConvergenceInfo


def solve_Q_ladders(
    model: ScoreModel,
    split: ScoreSplitMatrices,
    tol: float = SOLVER_TOLERANCE,
    *,
    max_sweeps: int = MAX_SWEEPS
) -> LadderSolution:
    """Solve for the first-descent matrices Q^(l), l in [-u_max, -1].

    Q^(l)_ab is the probability, starting from a at level 0, that the walk
    first goes below zero at level l (lattice units) in state b. The
    aggregate ``total`` is the stochastic matrix Q = sum_l Q^(l).

    :raises errors.LadderConvergenceError: if max_sweeps is exhausted.
    :raises errors.ModelHypothesisError: if the rows of Q do not sum to 1.
    """
    if split.u_max < 1:
        raise errors.ModelHypothesisError("no state has a negative score")

    starts = {
        j: group_by_landing(j, descent_tuples(j, split.u_max))
        for j in range(1, split.v_max + 1)
    }
    family, info = _successive_substitution(
        "Q",
        split,
        levels=range(-split.u_max, 0),
        returns=starts,
        tol=tol,
        max_sweeps=max_sweeps,
    )

    total = sum(family.values())
    deviation = float(np.max(np.abs(total.sum(axis=1) - 1.0)))
    if deviation > 100 * tol:
        raise errors.ModelHypothesisError(
            "the first-descent matrix Q has row sums off by {:.3e}; the walk "
            "does not go below zero almost surely".format(deviation)
        )
    return LadderSolution(family, total, info)


def solve_L_ladders(
    model: ScoreModel,
    split: ScoreSplitMatrices,
    tol: float = SOLVER_TOLERANCE,
    *,
    max_sweeps: int = MAX_SWEEPS
) -> LadderSolution:
    """Solve for the first-ascent matrices L^(l), l in [1, v_max].

    The family is defective: ``total`` is the vector L(inf) of
    probabilities that the walk ever goes above zero, one per start state.

    :raises errors.LadderConvergenceError: if max_sweeps is exhausted.
    :raises errors.ModelHypothesisError: if some L(inf) is not below 1.
    """
    if split.v_max < 1:
        raise errors.ModelHypothesisError("no state has a positive score")

    starts = {
        j: group_by_landing(j, ascent_tuples(j, split.v_max))
        for j in range(-split.u_max, 0)
    }
    family, info = _successive_substitution(
        "L",
        split,
        levels=range(1, split.v_max + 1),
        returns=starts,
        tol=tol,
        max_sweeps=max_sweeps,
    )

    total = sum(family.values()).sum(axis=1)
    if np.any(total >= 1.0 - 100 * tol):
        raise errors.ModelHypothesisError(
            "the probability of ever going above zero is {!r}, not below "
            "1; the drift is not negative enough".format(float(total.max()))
        )
    return LadderSolution(family, total, info)


def _successive_substitution(
    name: str,
    split: ScoreSplitMatrices,
    *,
    levels: Iterable[int],
    returns: Dict[int, Dict[int, Tuples]],
    tol: float,
    max_sweeps: int
):
    """Iterate X <- F(X) from the zero family until the change is <= tol.

    F(X)^(l) = P^(l) + P^(0) X^(l) + sum_j P^(j) sum_seq prod_i X^(t_i),
    where seq runs over the passage sequences from level j landing on l.
    Each sweep reads only the previous family.
    """
    levels = list(levels)
    size = split[0].shape[0]
    family = {level: np.zeros((size, size)) for level in levels}
    returns = {j: groups for j, groups in returns.items() if split[j].any()}
    monotone = True
    change = np.inf

    for sweep in range(1, max_sweeps + 1):
        product = _prefix_products(family, size)
        updated = {
            level: split[level] + split[0] @ family[level] for level in levels
        }
        for j, groups in returns.items():
            for landing, sequences in groups.items():
                passage = sum(product(sequence) for sequence in sequences)
                updated[landing] = updated[landing] + split[j] @ passage

        differences = [updated[level] - family[level] for level in levels]
        change = max(float(np.max(np.abs(d))) for d in differences)
        if monotone and min(float(d.min()) for d in differences) < -_MONOTONE_SLACK:
            logger.debug("{} iterates decreased at sweep {}".format(name, sweep))
            monotone = False

        family = updated
        if change <= tol:
            break
    else:
        raise errors.LadderConvergenceError(
            family=name, iterations=max_sweeps, residual=change
        )

    logger.debug(
        "{} ladders converged after {} sweeps (change {:.3e})".format(
            name, sweep, change
        )
    )
    for matrix in family.values():
        matrix.setflags(write=False)
    return family, ConvergenceInfo(name, sweep, change, monotone)


def _prefix_products(family: Family, size: int) -> Callable:
    memo = {(): np.eye(size)}

    def product(sequence):
        for i in range(1, len(sequence) + 1):
            prefix = sequence[:i]
            if prefix not in memo:
                memo[prefix] = memo[sequence[: i - 1]] @ family[sequence[i - 1]]
        return memo[sequence]

    return product
