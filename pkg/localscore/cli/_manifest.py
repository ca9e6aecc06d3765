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

import os
from typing import Any, Dict, List, Optional, Type

from mypy_extensions import TypedDict

from localscore.utils import yaml_utils

ManifestDict = TypedDict(
    "ManifestDict",
    {
        "command": str,
        "argv": List[str],
        "parameters": Dict[str, Any],
        "model": Optional[str],
        "version": str,
        "seeds": List[int],
        "outputs": List[str],
        "wall-time": float,
    },
)


class RunManifest(yaml_utils.LocalscoreYAMLObject):
    """What a command was asked to do and which files it wrote."""

    yaml_tag = u"!RunManifest"

    def __init__(self, *, assets: ManifestDict) -> None:
        super().__init__()
        self.assets = assets

    def __repr__(self):
        return "RunManifest(command={!r}, outputs={!r})".format(
            self.command, self.outputs
        )

    def __eq__(self, other):
        if type(other) is type(self):
            return self.__dict__ == other.__dict__

        return False

    @classmethod
    def load(cls: Type["RunManifest"], *, filepath: str) -> "RunManifest":
        with open(filepath) as manifest_file:
            manifest = yaml_utils.load(manifest_file)
        if not isinstance(manifest, cls):
            raise ValueError("{!r} does not hold a run manifest".format(filepath))
        return manifest

    def save(self, *, filepath: str) -> None:
        dirpath = os.path.dirname(filepath)
        if dirpath:
            os.makedirs(dirpath, exist_ok=True)
        with open(filepath, "w") as manifest_file:
            yaml_utils.dump(self, stream=manifest_file)

    @property
    def command(self) -> str:
        return self.assets["command"]

    @property
    def argv(self) -> List[str]:
        return list(self.assets["argv"])

    @property
    def outputs(self) -> List[str]:
        return list(self.assets["outputs"])

    @property
    def seeds(self) -> List[int]:
        return list(self.assets["seeds"])

    @property
    def model(self) -> Optional[str]:
        return self.assets["model"]
