# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
"""
Schema checks for tree-of-spaces files.  jsonschema reports errors in its
own vocabulary; the helpers below turn them into messages that point at
the offending entry, e.g. ``edges[2].ends`` or ``spaces.ball``.
"""
from __future__ import absolute_import
from __future__ import unicode_literals

import json
import os

from jsonschema import Draft4Validator
from jsonschema import RefResolver

from ctmap.const import SPECIFICATION_LATEST
from ctmap.error import InvalidSpecification
from ctmap.error import SPECIFICATION_EXPLANATION

SCHEMA_DIR = os.path.dirname(os.path.abspath(__file__))

YAML_TYPES = {
    dict: 'mapping',
    list: 'array',
    int: 'number',
    float: 'number',
    bool: 'boolean',
    str: 'string',
    bytes: 'string',
    type(None): 'null',
}

SPACE_SOURCES = ('model', 'edges', 'file')

_schemas = {}


def yaml_type(value):
    return YAML_TYPES.get(type(value), type(value).__name__)


def with_article(noun):
    return ('an ' if noun[:1] in 'aeiou' else 'a ') + noun


def either(types):
    """``['string', 'number']`` as "a string, or a number"."""
    if not isinstance(types, list):
        types = [types]
    if len(types) == 1:
        return with_article(types[0])
    return "%s, or %s" % (
        ", ".join([with_article(types[0])] + list(types[1:-1])),
        with_article(types[-1]))


def entry_path(path):
    """Render an error path the way the file is written."""
    out = ""
    for part in path:
        if isinstance(part, int):
            out += "[%d]" % part
        else:
            out += ("." if out else "") + str(part)
    return out


def load_schema(version):
    version = str(version)
    if version not in _schemas:
        filename = os.path.join(SCHEMA_DIR, "specification_v%s.json" % version)
        if not os.path.exists(filename):
            raise InvalidSpecification(
                'Specification version "%s" is unsupported. %s'
                % (version, SPECIFICATION_EXPLANATION))

        with open(filename, "r") as fh:
            _schemas[version] = json.load(fh)

    return _schemas[version]


def offending_key(error):
    """The property name quoted in an ``additionalProperties`` message."""
    try:
        return error.message.split("'")[1]
    except IndexError:
        return error.message.split('(')[1].split(' ')[0].strip("'")


def explain_one_of(error):
    """
    A space or attach rule matched none of its alternatives.  Report the
    first alternative that says something specific.
    """
    types = []
    for branch in error.context:
        if branch.validator == 'additionalProperties':
            return "contains unsupported option: '%s'" % offending_key(branch)

        if branch.path:
            return "contains %s, which is an invalid type, it should be %s" % (
                json.dumps(branch.instance), either(branch.validator_value))

        if branch.validator == 'type':
            types.append(branch.validator_value)

    if types:
        return "contains an invalid type, it should be %s" % either(types)

    return "must define exactly one of: %s" % ", ".join(SPACE_SOURCES)


def explain(error):
    where = entry_path(error.path) or "file"

    if error.validator == 'additionalProperties' and not error.path:
        return ('Invalid top-level property "%s". Valid top-level sections '
                'are: %s.\n\n%s') % (
            offending_key(error),
            ', '.join(error.schema['properties'].keys()),
            SPECIFICATION_EXPLANATION)

    if error.validator == 'oneOf':
        return "%s %s" % (where, explain_one_of(error))

    if error.validator == 'type':
        return "%s contains an invalid type, it should be %s" % (
            where, either(error.validator_value))

    if error.validator == 'required':
        return "%s is invalid: %s is required." % (
            where, ", ".join(error.validator_value))

    if error.path:
        return "%s value %s" % (where, error.message)

    return error.message


def validate_specification(data, filename=None, version=None):
    """Validate a parsed tree-of-spaces mapping against its JSON schema."""
    if not isinstance(data, dict):
        raise InvalidSpecification(
            "Top level object in '%s' needs to be a mapping, not %s." % (
                filename, with_article(yaml_type(data))))

    if version is None:
        version = data.get('specification', SPECIFICATION_LATEST)
    schema = load_schema(version)

    validator = Draft4Validator(
        schema,
        resolver=RefResolver("file://%s/" % SCHEMA_DIR, schema),
    )
    errors = sorted(validator.iter_errors(data), key=str)
    if errors:
        raise InvalidSpecification(
            "The tree-of-spaces file%s is invalid because:\n%s" % (
                " '%s'" % filename if filename else "",
                "\n".join(explain(e) for e in errors)))

    return data
