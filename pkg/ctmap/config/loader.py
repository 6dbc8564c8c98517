# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import os

from ctmap.config.validation import validate_specification
from ctmap.const import DEFAULT_GENERATOR_RADIUS
from ctmap.const import DEFAULT_TILING_MAX_RADIUS
from ctmap.const import SPECIFICATION_LATEST
from ctmap.error import InvalidSpecification
from ctmap.error import SPECIFICATION_EXPLANATION
from ctmap.graph import graph_from_mapping
from ctmap.graph import load_yaml
from ctmap.graph import read_graph
from ctmap.group import cayley_ball
from ctmap.group import FreeModel
from ctmap.group import is_model_spec
from ctmap.group import parse_automorphism
from ctmap.group import parse_model
from ctmap.logger import logger
from ctmap.settings import parse_number
from ctmap.tree import automorphism_table
from ctmap.tree import FamilyParams
from ctmap.tree import identity_table
from ctmap.tree import TreeEdge
from ctmap.tree import TreeOfSpaces

ATTACH_IDENTITY = "identity"
ATTACH_AUTOMORPHISM = "automorphism:"


def load_graph(source, radius=DEFAULT_GENERATOR_RADIUS,
               tiling_cap=DEFAULT_TILING_MAX_RADIUS):
    """A model spec string expanded to a ball, or a graph file."""
    if is_model_spec(source):
        return cayley_ball(parse_model(source), radius, tiling_cap=tiling_cap)
    return read_graph(source)


class _SpaceTable(object):
    """Named spaces of a tree-of-spaces file, built on first use."""

    def __init__(self, entries, basedir, radius, tiling_cap):
        self._entries = entries
        self._basedir = basedir
        self._radius = radius
        self._tiling_cap = tiling_cap
        self._built = {}

    def __getitem__(self, name):
        if name not in self._entries:
            raise InvalidSpecification("Unknown space '%s'" % name)

        if name not in self._built:
            entry = self._entries[name]
            where = "spaces.%s" % name
            if 'model' in entry:
                model = parse_model(entry['model'])
                radius = entry.get('radius', self._radius)
                space = cayley_ball(model, radius, tiling_cap=self._tiling_cap)
            elif 'file' in entry:
                space = read_graph(os.path.join(self._basedir, entry['file']))
            else:
                space = graph_from_mapping(entry, where=where)
            logger.debug("Space '%s': %r", name, space)
            self._built[name] = space

        return self._built[name]


def _attach(rule, edge_space, target, edge, side):
    if isinstance(rule, list):
        return rule

    if rule == ATTACH_IDENTITY:
        return identity_table(edge_space, target, edge, side)

    if rule.startswith(ATTACH_AUTOMORPHISM):
        automorphism = parse_automorphism(rule[len(ATTACH_AUTOMORPHISM):])
        model = FreeModel(automorphism.rank)
        return automorphism_table(model, automorphism, edge_space, target, edge, side)

    raise InvalidSpecification(
        "Edge %s: unknown attach rule '%s'; expected identity, "
        "automorphism:<rules> or a list of vertex ids" % (edge, rule))


def tree_from_mapping(data, filename=None, radius=DEFAULT_GENERATOR_RADIUS,
                      tiling_cap=DEFAULT_TILING_MAX_RADIUS):
    validate_specification(data, filename)

    version = str(data['specification'])
    if version != SPECIFICATION_LATEST:
        raise InvalidSpecification(
            'Specification version "%s" is unsupported. %s'
            % (version, SPECIFICATION_EXPLANATION))

    basedir = os.path.dirname(os.path.abspath(filename)) if filename else os.getcwd()
    spaces = _SpaceTable(data['spaces'], basedir, radius, tiling_cap)

    vertex_spaces = [spaces[name] for name in data['vertices']]
    n = len(vertex_spaces)

    edges = []
    for entry in data.get('edges', []):
        u, v = entry['ends']
        name = "%d-%d" % (u, v)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidSpecification("Edge %s: tree has %d vertices" % (name, n))

        space = spaces[entry['space']]
        lo = _attach(entry.get('lo', ATTACH_IDENTITY), space, vertex_spaces[u], name, u)
        hi = _attach(entry.get('hi', ATTACH_IDENTITY), space, vertex_spaces[v], name, v)
        edges.append(TreeEdge(u, v, space, lo, hi))

    family = data.get('family', {})
    params = FamilyParams(
        parse_number(family.get('delta', 0)),
        parse_number(family.get('K', 1)),
        parse_number(family.get('epsilon', 0)),
    )

    return TreeOfSpaces(
        vertex_spaces, edges,
        root=data.get('root', 0),
        params=params,
        name=data.get('name') or (os.path.basename(filename) if filename else None),
    )


def load_tree_spec(path, radius=DEFAULT_GENERATOR_RADIUS,
                   tiling_cap=DEFAULT_TILING_MAX_RADIUS):
    """Read, validate and build a tree-of-spaces YAML file."""
    if not os.path.isfile(path):
        raise InvalidSpecification("Tree-of-spaces file not found: %s" % path)

    return tree_from_mapping(load_yaml(path), filename=path, radius=radius,
                             tiling_cap=tiling_cap)
