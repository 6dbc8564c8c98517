# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import contextlib
import io
import os

import yaml

from ctmap.graph import build_graph


@contextlib.contextmanager
def cd(path):
    """
    A context manager which changes the working directory to the given
    path, and then changes it back to its previous value on exit.
    """
    prev_cwd = os.getcwd()
    os.chdir(path)
    try:
        yield
    finally:
        os.chdir(prev_cwd)


def path_graph(n):
    """The path 0 - 1 - ... - n-1."""
    return build_graph([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def random_tree(rng, n):
    """Each vertex after the first hangs off a uniformly chosen earlier one."""
    return build_graph([(v, int(rng.integers(v))) for v in range(1, n)])


def product_spec(length=3, radius=3, model="free:1"):
    """A tree-of-spaces mapping: a path of identical balls glued by identity."""
    return {
        'specification': '1.0',
        'name': 'product',
        'family': {'delta': 0, 'K': 1, 'epsilon': 0},
        'spaces': {
            'ball': {'model': model, 'radius': radius},
        },
        'vertices': ['ball'] * length,
        'edges': [
            {'ends': [v, v + 1], 'space': 'ball', 'lo': 'identity', 'hi': 'identity'}
            for v in range(length - 1)
        ],
    }


def write_yaml(path, data):
    with io.open(path, 'w', encoding='utf-8') as fh:
        yaml.safe_dump(data, fh, default_flow_style=False)
    return path


def write_text(path, text):
    with io.open(path, 'w', encoding='utf-8') as fh:
        fh.write(text)
    return path
