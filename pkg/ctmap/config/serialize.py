# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import io
from fractions import Fraction

from ruamel.yaml import YAML


def serialize_string(dumper, data):
    """Quote strings that would otherwise read back as booleans."""
    if isinstance(data, bytes):
        data = data.decode('utf-8')

    if data.lower() in ('y', 'n', 'yes', 'no', 'on', 'off', 'true', 'false'):
        return dumper.represent_scalar('tag:yaml.org,2002:str', data, style='"')
    return dumper.represent_str(data)


def serialize_fraction(dumper, data):
    if data.denominator == 1:
        return dumper.represent_int(data.numerator)
    return dumper.represent_str(str(data))


def serialize_tuple(dumper, data):
    return dumper.represent_list(list(data))


def serialize_config(data):
    """Block-style YAML with the key order of ``data``."""
    yaml = YAML(typ='rt')

    yaml.representer.add_representer(str, serialize_string)
    yaml.representer.add_representer(Fraction, serialize_fraction)
    yaml.representer.add_representer(tuple, serialize_tuple)

    yaml.default_flow_style = False
    yaml.sort_keys = False
    yaml.explicit_start = True
    yaml.sort_base_mapping_type_on_output = False
    yaml.indent(mapping=2, sequence=4, offset=2)

    ret = io.StringIO("")
    yaml.dump(data, ret)
    return ret.getvalue()
