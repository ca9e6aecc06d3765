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

import csv
import json
import logging
import os
from typing import Any, Dict, Iterable, List, Sequence

import numpy as np

logger = logging.getLogger(__name__)


def format_value(value: Any) -> str:
    """Render a CSV cell; floats keep 17 significant digits."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "{:.17g}".format(float(value))
    return str(value)


class OutputWriter:
    """Write CSV and JSON files under one directory and remember them."""

    def __init__(self, output_dir: str) -> None:
        self.output_dir = output_dir
        self.outputs = []  # type: List[str]

    def path(self, name: str) -> str:
        return os.path.join(self.output_dir, name)

    def write_csv(
        self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> str:
        path = self.prepare(name)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_value(v) for v in row])
        logger.info("Wrote {}".format(path))
        return path

    def write_matrix(self, name: str, states: Sequence[str], matrix: np.ndarray) -> str:
        rows = ([state] + list(row) for state, row in zip(states, matrix))
        return self.write_csv(name, ["state"] + list(states), rows)

    def write_json(self, name: str, document: Dict[str, Any]) -> str:
        path = self.prepare(name)
        with open(path, "w") as f:
            json.dump(_plain(document), f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info("Wrote {}".format(path))
        return path

    def prepare(self, name: str) -> str:
        """Return the path for ``name`` and record it as an output."""
        os.makedirs(self.output_dir, exist_ok=True)
        path = self.path(name)
        self.outputs.append(path)
        return path


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value
