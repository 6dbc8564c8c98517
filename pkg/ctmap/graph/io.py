# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os

import yaml

from ctmap.error import InvalidSpecification
from ctmap.error import MalformedEdgeList
from ctmap.graph.graph import build_graph
from ctmap.logger import logger

YAML_SUFFIXES = ('.yaml', '.yml')


def parse_edge_list(text, filename="<string>"):
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue

        parts = content.split()
        if len(parts) != 2:
            raise MalformedEdgeList(filename, lineno, line)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedEdgeList(filename, lineno, line)

    return edges


def read_edge_list(path):
    """Read ``u v`` pairs, one per line, with ``#`` comments."""
    with io.open(path, 'rb') as fh:
        data = fh.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        lineno = data.count(b'\n', 0, e.start) + 1
        line = data.splitlines()[lineno - 1]
        raise MalformedEdgeList(path, lineno, line.decode('utf-8', 'replace'))
    edges = parse_edge_list(text, filename=path)

    logger.debug("Read %d edges from %s", len(edges), path)
    return build_graph(edges)


def load_yaml(path):
    try:
        with io.open(path, 'r', encoding='utf-8') as fh:
            return yaml.safe_load(fh)
    except (IOError, yaml.YAMLError, UnicodeDecodeError) as e:
        error_name = getattr(e, '__module__', '') + '.' + e.__class__.__name__
        raise InvalidSpecification("{}: {}".format(error_name, e))


def graph_from_mapping(data, where="<mapping>"):
    if not isinstance(data, dict) or 'edges' not in data:
        raise InvalidSpecification("%s: a graph needs an 'edges' list" % where)

    edges = data['edges']
    if not isinstance(edges, list):
        raise InvalidSpecification("%s: 'edges' must be a list" % where)

    pairs = []
    for i, edge in enumerate(edges):
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise InvalidSpecification(
                "%s: edge %d must be a pair of vertex ids" % (where, i))
        try:
            pairs.append((int(edge[0]), int(edge[1])))
        except (TypeError, ValueError):
            raise MalformedEdgeList("%s edges" % where, i, "%s %s" % tuple(edge))

    labels = data.get('labels')
    if labels is not None:
        labels = [str(label) for label in labels]

    return build_graph(pairs, labels=labels)


def read_graph(path):
    """Read a graph from an edge-list file or a YAML file with ``edges``."""
    if not os.path.isfile(path):
        raise InvalidSpecification("Graph file not found: %s" % path)

    if path.endswith(YAML_SUFFIXES):
        return graph_from_mapping(load_yaml(path), where=path)

    return read_edge_list(path)
