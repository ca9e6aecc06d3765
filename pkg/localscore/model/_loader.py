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
from fractions import Fraction
from typing import Any, Dict

from localscore import errors
from localscore._schema import Validator
from localscore.model._score_model import ScoreModel
from localscore.utils import yaml_utils

logger = logging.getLogger(__name__)


def load_model(path: str) -> ScoreModel:
    """Load and validate a model file.

    :raises errors.ModelFileError: if the file cannot be read.
    :raises errors.YamlValidationError: if it does not match the schema.
    :raises errors.ModelStructureError: if the content is inconsistent.
    """
    document = yaml_utils.load_yaml_file(path)
    model = model_from_document(document, source=path)
    logger.debug("Loaded model {!r} from {!r}".format(model.digest[:12], path))
    return model


def model_from_document(document: Dict[str, Any], *, source="model.yaml") -> ScoreModel:
    Validator(document).validate(source=source)
    transition = [[_probability(p) for p in row] for row in document["transition"]]
    return ScoreModel(
        alphabet=document["alphabet"],
        transition=transition,
        scores=document["scores"],
        description=document.get("description", ""),
    )


def dump_model(model: ScoreModel, path: str) -> None:
    with open(path, "w") as f:
        yaml_utils.dump(model.to_document(), stream=f, sort_keys=False)


def _probability(value) -> float:
    if isinstance(value, str):
        try:
            return float(Fraction(value.replace(" ", "")))
        except ZeroDivisionError:
            raise errors.ModelStructureError(
                "transition entry {!r} divides by zero".format(value)
            ) from None
    return float(value)
