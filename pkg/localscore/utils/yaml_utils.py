# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright (C) 2018-2020 Canonical Ltd
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
from typing import Any, Dict, Optional, TextIO, Union

import yaml

from localscore.errors import ModelFileError, YamlValidationError

try:
    # Model files and manifests must parse the same everywhere, so only the
    # libyaml loader and dumper are accepted.
    from yaml import CSafeLoader, CSafeDumper  # type: ignore
except ImportError:
    raise RuntimeError("localscore requires PyYAML to be built with libyaml bindings")


def load_yaml_file(yaml_file_path: str) -> collections.OrderedDict:
    """Load a YAML document, mapping read and parse failures to errors.

    :raises errors.ModelFileError: if the file cannot be read.
    :raises errors.YamlValidationError: if it is not valid YAML.
    """
    try:
        with open(yaml_file_path, encoding="utf-8") as fp:
            contents = load(fp)
    except OSError as e:
        raise ModelFileError(yaml_file_path, e.strerror or str(e)) from e
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        message = "{} on line {}, column {}".format(
            e.problem, mark.line + 1, mark.column + 1
        )
        raise YamlValidationError(message, yaml_file_path) from e
    except (yaml.YAMLError, UnicodeDecodeError) as e:
        raise YamlValidationError(str(e), yaml_file_path) from e

    if contents is None:
        return collections.OrderedDict()
    return contents


def load(stream: TextIO) -> Any:
    """Safely load YAML, keeping mapping order."""
    return yaml.load(stream, Loader=_OrderedLoader)


def dump(
    data: Union[Dict[str, Any], yaml.YAMLObject],
    *,
    stream: Optional[TextIO] = None,
    sort_keys: bool = True
) -> Optional[str]:
    """Safely dump YAML in block style."""
    return yaml.dump(
        data,
        stream=stream,
        Dumper=_OrderedDumper,
        default_flow_style=False,
        allow_unicode=True,
        sort_keys=sort_keys,
    )


def _ordered_mapping(loader, node):
    loader.flatten_mapping(node)
    try:
        return collections.OrderedDict(loader.construct_pairs(node))
    except TypeError:
        raise yaml.constructor.ConstructorError(
            "while constructing a mapping",
            node.start_mark,
            "found unhashable key",
            node.start_mark,
        )


def _represent_ordered_mapping(dumper, data):
    return dumper.represent_dict(data.items())


class _OrderedLoader(CSafeLoader):
    pass


class _OrderedDumper(CSafeDumper):
    pass


_OrderedLoader.add_constructor(
    yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, _ordered_mapping
)
_OrderedDumper.add_representer(collections.OrderedDict, _represent_ordered_mapping)


class LocalscoreYAMLObject(yaml.YAMLObject):
    yaml_loader = _OrderedLoader
    yaml_dumper = _OrderedDumper
