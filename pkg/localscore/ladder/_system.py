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
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from localscore import errors
from localscore.ladder._constants import (
    a_star,
    c_infinity_forms,
    constant_c,
    expected_descent,
    karlin_dembo_constant,
)
from localscore.ladder._invariants import (
    g_matrices,
    invariant_vector_w,
    invariant_vector_z,
)
from localscore.ladder._solver import (
    SOLVER_TOLERANCE,
    ConvergenceInfo,
    Family,
    solve_L_ladders,
    solve_Q_ladders,
)
from localscore.ladder._split import ScoreSplitMatrices, score_split
from localscore.model import ScoreModel, mean_score, partition_states
from localscore.spectral import SpectralData

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LadderSystem:
    """Every ladder quantity of a model, solved and checked.

    Families are keyed by lattice level; multiply by ``lattice_step`` to
    get score units.
    """

    model: ScoreModel = field(repr=False)
    spectral: SpectralData = field(repr=False)
    mean_score: float
    split: ScoreSplitMatrices = field(repr=False)
    Q_ell: Family = field(repr=False)
    Q: np.ndarray = field(repr=False)
    L_ell: Family = field(repr=False)
    L_inf: np.ndarray = field(repr=False)
    z: np.ndarray = field(repr=False)
    G_ell: Family = field(repr=False)
    G_inf: np.ndarray = field(repr=False)
    w: np.ndarray = field(repr=False)
    c: float
    c_inf: float
    c_inf_alternate: float
    A_star: float
    expected_descent: np.ndarray = field(repr=False)
    q_convergence: ConvergenceInfo = field(repr=False)
    l_convergence: ConvergenceInfo = field(repr=False)

    @property
    def lattice_step(self) -> int:
        return self.model.lattice_step

    @property
    def theta_star(self) -> float:
        return self.spectral.theta_star

    @property
    def u_star(self) -> np.ndarray:
        return self.spectral.u_star

    @property
    def g_row_deviation(self) -> float:
        return float(np.max(np.abs(self.G_inf.sum(axis=1) - 1.0)))

    @property
    def z_residual(self) -> float:
        return float(np.max(np.abs(self.z @ self.Q - self.z)))

    @property
    def w_residual(self) -> float:
        return float(np.max(np.abs(self.w @ self.G_inf - self.w)))

    def karlin_dembo_constant(self) -> float:
        return karlin_dembo_constant(
            self.model, self.spectral, self.z, self.w, mean=self.mean_score
        )

    def supports_karlin_dembo(self) -> bool:
        try:
            self.karlin_dembo_constant()
        except errors.UnsupportedModelError:
            return False
        return True

    def to_report(self) -> Dict[str, Any]:
        alphabet = self.model.alphabet
        report = dict(
            theta_star=self.theta_star,
            lattice_step=self.lattice_step,
            mean_score=self.mean_score,
            c=self.c,
            c_inf=self.c_inf,
            c_inf_alternate=self.c_inf_alternate,
            A_star=self.A_star,
            L_inf=dict(zip(alphabet, self.L_inf.tolist())),
            z=dict(zip(alphabet, self.z.tolist())),
            w=dict(zip(alphabet, self.w.tolist())),
            u_star=dict(zip(alphabet, self.u_star.tolist())),
            expected_descent=dict(zip(alphabet, self.expected_descent.tolist())),
            checks=dict(
                g_row_deviation=self.g_row_deviation,
                z_residual=self.z_residual,
                w_residual=self.w_residual,
            ),
            convergence={
                info.family: dict(
                    iterations=info.iterations,
                    residual=info.residual,
                    monotone=info.monotone,
                )
                for info in (self.q_convergence, self.l_convergence)
            },
        )  # type: Dict[str, Any]
        if self.supports_karlin_dembo():
            report["K_star"] = self.karlin_dembo_constant()
        return report


def solve_ladder_system(
    model: ScoreModel,
    spectral: SpectralData,
    tol: float = SOLVER_TOLERANCE,
    *,
    mean: Optional[float] = None
) -> LadderSystem:
    """Run the ladder operations in order for a validated model."""
    if mean is None:
        mean = mean_score(model)
    partition = partition_states(model)
    split = score_split(model)

    Q_ell, Q, q_info = solve_Q_ladders(model, split, tol)
    L_ell, L_inf, l_info = solve_L_ladders(model, split, tol)

    z = invariant_vector_z(Q, partition)
    G_ell, G_inf = g_matrices(spectral, L_ell)
    w = invariant_vector_w(G_inf, partition)

    c = constant_c(spectral, w, L_ell)
    c_inf, c_inf_alternate = c_infinity_forms(spectral, w, L_ell, L_inf, c=c)
    descent = expected_descent(model, Q_ell)
    descent.setflags(write=False)
    A = a_star(model, z, Q_ell, mean=mean)

    logger.debug(
        "Ladder constants: c={!r}, c(inf)={!r}, A*={!r}".format(c, c_inf, A)
    )
    return LadderSystem(
        model=model,
        spectral=spectral,
        mean_score=mean,
        split=split,
        Q_ell=Q_ell,
        Q=Q,
        L_ell=L_ell,
        L_inf=L_inf,
        z=z,
        G_ell=G_ell,
        G_inf=G_inf,
        w=w,
        c=c,
        c_inf=c_inf,
        c_inf_alternate=c_inf_alternate,
        A_star=A,
        expected_descent=descent,
        q_convergence=q_info,
        l_convergence=l_info,
    )
