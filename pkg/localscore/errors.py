# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright (C) 2016-2020 Canonical Ltd
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

import collections
import contextlib
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence

from localscore.utils import formatting_utils

# Exit codes shared by the command line runner.
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3
EXIT_UNSUPPORTED = 4

# dict of jsonschema validator -> cause pairs. Wish jsonschema just gave us
# better messages.
_VALIDATION_ERROR_CAUSES = {
    "minItems": "minimum number of items is {validator_value}",
    "uniqueItems": "items must be unique",
}


class LocalscoreError(Exception):
    """Base class for errors carrying a format string."""

    fmt = "Daughter classes should redefine this"

    def __init__(self, **kwargs) -> None:
        for key, value in kwargs.items():
            setattr(self, key, value)

    def __str__(self):
        return self.fmt.format([], **self.__dict__)

    def get_exit_code(self):
        """Exit code to use if this exception causes localscore to exit."""
        return EXIT_VALIDATION


class LocalscoreException(Exception, ABC):
    """Base class for errors with a brief and a suggested resolution."""

    @abstractmethod
    def get_brief(self) -> str:
        """Concise, single-line description of the error."""

    @abstractmethod
    def get_resolution(self) -> str:
        """Concise suggestion for user to resolve error."""

    def get_details(self) -> Optional[str]:
        """Detailed technical information, if required for user to debug issue."""
        return None

    def get_exit_code(self) -> int:
        """Exit code to use when exiting localscore due to this exception."""
        return EXIT_VALIDATION

    def __str__(self) -> str:
        return self.get_brief()


class ModelFileError(LocalscoreError):

    fmt = "Failed to read model file {path!r}: {message}"

    def __init__(self, path: str, message: str) -> None:
        super().__init__(path=path, message=message)

    def get_exit_code(self):
        return EXIT_IO


class ManifestError(LocalscoreError):

    fmt = "Failed to read run manifest {path!r}: {message}"

    def __init__(self, path: str, message: str) -> None:
        super().__init__(path=path, message=message)

    def get_exit_code(self):
        return EXIT_IO


class YamlValidationError(LocalscoreError):

    fmt = "Issues while validating {source}: {message}"

    @classmethod
    def from_validation_error(cls, error, *, source="model.yaml"):
        """Take a jsonschema.ValidationError and create a YamlValidationError.

        The validation errors coming from jsonschema are a nightmare. This
        class tries to make them a bit more understandable.
        """

        messages = []

        preamble = _determine_preamble(error)
        cause = _determine_cause(error)
        supplement = _determine_supplemental_info(error)

        if preamble:
            messages.append(preamble)

        # If we have a preamble we are not at the root
        if supplement and preamble:
            messages.append(error.message)
            messages.append("({})".format(supplement))
        elif supplement:
            messages.append(supplement)
        elif cause:
            messages.append(cause)
        else:
            messages.append(error.message)

        return cls(" ".join(messages), source)

    def __init__(self, message, source="model.yaml"):
        super().__init__(message=message, source=source)

    def get_exit_code(self):
        return EXIT_IO


class ModelStructureError(LocalscoreError):

    fmt = "Invalid score model: {message}"

    def __init__(self, message: str) -> None:
        super().__init__(message=message)


class ModelValidationError(LocalscoreException):
    def __init__(self, *, failed_checks: Sequence[str]) -> None:
        self._failed_checks = list(failed_checks)

    def get_brief(self) -> str:
        checks = formatting_utils.humanize_list(self._failed_checks, "and")
        return f"The score model failed the {checks} check(s)."

    def get_resolution(self) -> str:
        return (
            "Make sure the chain is irreducible and aperiodic, the mean score "
            "is negative and every state can move to a positive and to a "
            "negative score in one step."
        )


class ModelHypothesisError(LocalscoreError):

    fmt = (
        "The model violates the negative drift hypotheses numerically: "
        "{message}"
    )

    def __init__(self, message: str) -> None:
        super().__init__(message=message)


class ReducibleRestrictionError(LocalscoreError):

    fmt = (
        "The restriction of {matrix} to the {subset} states is reducible; "
        "the invariant vector {vector} is not unique."
    )

    def __init__(self, *, matrix: str, subset: str, vector: str) -> None:
        super().__init__(matrix=matrix, subset=subset, vector=vector)


class NumericError(LocalscoreError):
    """Base class for numeric failures."""

    def get_exit_code(self):
        return EXIT_NUMERIC


class StationaryConvergenceError(NumericError):

    fmt = (
        "Failed to compute a stationary vector: residual {residual:.3e} "
        "exceeds {tolerance:.1e}."
    )

    def __init__(self, *, residual: float, tolerance: float) -> None:
        super().__init__(residual=residual, tolerance=tolerance)


class EigenpairConvergenceError(NumericError):

    fmt = "Failed to compute the dominant eigenpair: {message}"

    def __init__(self, message: str) -> None:
        super().__init__(message=message)


class SpectralOverflowError(NumericError):

    fmt = (
        "Cannot evaluate Phi(theta) at theta={theta!r}: exponent exceeds "
        "the overflow guard {guard!r}."
    )

    def __init__(self, *, theta: float, guard: float) -> None:
        super().__init__(theta=theta, guard=guard)


class NoRootFoundError(NumericError):

    fmt = "No root found for rho(theta) = 1: {message}"

    def __init__(self, message: str) -> None:
        super().__init__(message=message)


class LadderConvergenceError(NumericError):

    fmt = (
        "Failed to solve the {family} ladder system after {iterations} "
        "sweeps: residual {residual:.3e}."
    )

    def __init__(self, *, family: str, iterations: int, residual: float) -> None:
        super().__init__(family=family, iterations=iterations, residual=residual)


class ConsistencyError(NumericError):

    fmt = "Internal consistency check {check!r} failed: {message}"

    def __init__(self, *, check: str, message: str) -> None:
        super().__init__(check=check, message=message)


class SequenceInputError(LocalscoreError):

    fmt = "Invalid sequence: {message}"

    def __init__(self, message: str) -> None:
        super().__init__(message=message)

    def get_exit_code(self):
        return EXIT_IO


class EstimationError(NumericError):

    fmt = (
        "Cannot estimate transitions out of {state!r}: the state is never "
        "followed by another symbol and the pseudocount is zero."
    )

    def __init__(self, state: str) -> None:
        super().__init__(state=state)


class InvalidStepError(LocalscoreError):

    fmt = "{step_name!r} is not a valid analysis step."

    def __init__(self, step_name: str) -> None:
        super().__init__(step_name=step_name)


class LevelRangeError(LocalscoreError):

    fmt = (
        "Level {level} is beyond the support of the {statistic} table "
        "(maximum {maximum})."
    )

    def __init__(self, *, statistic: str, level: int, maximum: int) -> None:
        super().__init__(statistic=statistic, level=level, maximum=maximum)

    def get_exit_code(self):
        return EXIT_IO


class InvalidGridError(LocalscoreError):

    fmt = (
        "Invalid grid from {start!r} to {stop!r} by {step!r}: the step must "
        "be positive and the end not below the start."
    )

    def __init__(self, *, start: float, stop: float, step: float) -> None:
        super().__init__(start=start, stop=stop, step=step)

    def get_exit_code(self):
        return EXIT_IO


class UnsupportedModelError(LocalscoreException):
    def __init__(self, *, feature: str, scores: Sequence[int]) -> None:
        self._feature = feature
        self._scores = sorted(set(int(s) for s in scores))

    def get_brief(self) -> str:
        return f"The {self._feature} is not available for scores {self._scores!r}."

    def get_resolution(self) -> str:
        return "Use a scoring scheme with values in {-1, 0, 1}."

    def get_exit_code(self) -> int:
        return EXIT_UNSUPPORTED


def _determine_preamble(error):
    messages = []
    path = _determine_property_path(error)
    if path:
        messages.append(
            "The '{}' property does not match the required schema:".format(
                "/".join(path)
            )
        )
    return " ".join(messages)


def _determine_cause(error):
    messages = []

    # error.validator_value may contain a custom validation error message.
    # If so, use it instead of the garbage message jsonschema gives us.
    with contextlib.suppress(TypeError, KeyError):
        messages.append(error.validator_value["validation-failure"].format(error))

    # The schema itself may have a custom validation error message. If so,
    # use it as well.
    with contextlib.suppress(AttributeError, TypeError, KeyError):
        key = error
        if (
            error.schema.get("type") == "object"
            and error.validator == "additionalProperties"
        ):
            key = list(error.instance.keys())[0]

        messages.append(error.schema["validation-failure"].format(key))

    # anyOf failures might have usable context... try to improve them a bit
    if error.validator == "anyOf":
        contextual_messages: Dict[str, List[str]] = collections.OrderedDict()
        for contextual_error in error.context:
            key = contextual_error.schema_path.popleft()
            if key not in contextual_messages:
                contextual_messages[key] = []
            message = contextual_error.message
            if message:
                # Sure it starts lower-case (not all messages do)
                contextual_messages[key].append(message[0].lower() + message[1:])

        any_of_messages: List[str] = []
        for key, value in contextual_messages.items():
            any_of_messages.append(formatting_utils.humanize_list(value, "and", "{}"))

        messages.append(formatting_utils.humanize_list(any_of_messages, "or", "{}"))

    return " ".join(messages)


def _determine_supplemental_info(error):
    message = _VALIDATION_ERROR_CAUSES.get(error.validator, "").format(
        validator_value=error.validator_value
    )

    if not message and error.cause:
        message = error.cause

    return message


def _determine_property_path(error):
    path = []
    while error.absolute_path:
        element = error.absolute_path.popleft()
        # assume numbers are indices and use 'xxx[123]' notation.
        if isinstance(element, int):
            path[-1] = "{}[{}]".format(path[-1], element)
        else:
            path.append(str(element))

    return path
