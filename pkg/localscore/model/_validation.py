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
from typing import List, Optional

import numpy as np

from localscore import errors
from localscore.model._markov import is_irreducible, period, stationary_vector
from localscore.model._score_model import ScoreModel

logger = logging.getLogger(__name__)

ROW_SUM_TOLERANCE = 1e-12

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"


class ValidationCheck:
    def __init__(self, name: str, status: str, value: Optional[float] = None) -> None:
        self.name = name
        self.status = status
        self.value = value

    def __repr__(self):
        return "ValidationCheck({!r}, {!r}, {!r})".format(
            self.name, self.status, self.value
        )


class ValidationReport:
    """The outcome of every hypothesis check run against a score model."""

    def __init__(self) -> None:
        self.checks = []  # type: List[ValidationCheck]
        self.warnings = []  # type: List[str]

    @property
    def passed(self) -> bool:
        return not self.failed_checks

    @property
    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if c.status == FAILED]

    def get_check(self, name: str) -> ValidationCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def add(self, name: str, ok: bool, value: Optional[float] = None) -> None:
        self.checks.append(ValidationCheck(name, PASSED if ok else FAILED, value))

    def skip(self, name: str) -> None:
        self.checks.append(ValidationCheck(name, SKIPPED))

    def raise_for_failure(self) -> None:
        if not self.passed:
            raise errors.ModelValidationError(failed_checks=self.failed_checks)

    def to_dict(self):
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "status": c.status, "value": c.value}
                for c in self.checks
            ],
            "warnings": list(self.warnings),
        }


def validate_model(model: ScoreModel) -> ValidationReport:
    """Check the hypotheses every downstream computation relies on.

    Structural problems (shapes, negative or non-finite entries) are
    rejected when the ScoreModel is built; this covers stochasticity,
    irreducibility, aperiodicity, the sign of the mean score and the
    one-step reachability of positive and negative scores.
    """
    report = ValidationReport()
    matrix = model.transition
    scores = model.scores

    row_error = float(np.max(np.abs(matrix.sum(axis=1) - 1.0)))
    report.add("stochastic", row_error <= ROW_SUM_TOLERANCE, row_error)

    irreducible = is_irreducible(matrix)
    report.add("irreducible", irreducible, 1.0 if irreducible else 0.0)

    if irreducible:
        chain_period = period(matrix)
        report.add("aperiodic", chain_period == 1, float(chain_period))
    else:
        report.skip("aperiodic")

    if irreducible and row_error <= ROW_SUM_TOLERANCE:
        pi = stationary_vector(matrix)
        average = float(scores @ pi)
        report.add("negative-mean-score", average < 0, average)
    else:
        report.skip("negative-mean-score")

    to_positive = matrix[:, scores > 0].sum(axis=1)
    to_negative = matrix[:, scores < 0].sum(axis=1)
    report.add(
        "positive-score-reachable",
        bool(np.all(to_positive > 0)),
        float(to_positive.min()),
    )
    report.add(
        "negative-score-reachable",
        bool(np.all(to_negative > 0)),
        float(to_negative.min()),
    )

    if np.any(matrix == 0):
        report.warnings.append(
            "the transition matrix is not strictly positive "
            "({} zero entries)".format(int(np.count_nonzero(matrix == 0)))
        )

    for check in report.checks:
        logger.debug("Validation check {!r}: {}".format(check.name, check.status))
    for warning in report.warnings:
        logger.warning(warning)

    return report
