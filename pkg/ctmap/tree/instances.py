# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from ctmap.error import AttachTargetMissing
from ctmap.group import cayley_ball
from ctmap.group import FreeModel
from ctmap.group import parse_model
from ctmap.tree.tree import FamilyParams
from ctmap.tree.tree import TreeEdge
from ctmap.tree.tree import TreeOfSpaces


def identity_table(edge_space, target, edge="?", side=0):
    """Attach table sending each edge-space vertex to the same label."""
    index = target.label_index
    table = []
    for x in range(edge_space.vertex_count):
        label = edge_space.label(x)
        if label not in index:
            raise AttachTargetMissing(edge, side, label)
        table.append(index[label])
    return table


def automorphism_table(model, automorphism, edge_space, target, edge="?", side=0):
    """Attach table sending the word ``w`` to ``phi(w)``."""
    index = target.label_index
    table = []
    for x in range(edge_space.vertex_count):
        image = model.label(automorphism(model.parse(edge_space.label(x))))
        if image not in index:
            raise AttachTargetMissing(edge, side, image)
        table.append(index[image])
    return table


def product_tree(model="free:1", length=3, radius=3, params=None):
    """
    A path of ``length`` tree vertices carrying the same ball at every vertex
    and edge, glued by identity maps.
    """
    if not hasattr(model, "kind"):
        model = parse_model(model)
    space = cayley_ball(model, radius)

    edges = []
    for v in range(length - 1):
        table = identity_table(space, space, "%d-%d" % (v, v + 1))
        edges.append(TreeEdge(v, v + 1, space, table, table))

    return TreeOfSpaces(
        [space] * length, edges, root=0,
        params=params or FamilyParams(0, 1, 0),
        name="product:%s:%d" % (model, radius),
    )


def twisted_tree(rank, automorphism, length=2, edge_radius=2, vertex_radius=4,
                 params=None):
    """
    A path of free-group balls: each edge space is the ball of
    ``edge_radius``, attached by the identity below and by ``automorphism``
    above.
    """
    model = FreeModel(rank)
    vertex_space = cayley_ball(model, vertex_radius)
    edge_space = cayley_ball(model, edge_radius)

    edges = []
    for v in range(length - 1):
        name = "%d-%d" % (v, v + 1)
        lo = identity_table(edge_space, vertex_space, name, v)
        hi = automorphism_table(model, automorphism, edge_space, vertex_space, name, v + 1)
        edges.append(TreeEdge(v, v + 1, edge_space, lo, hi))

    return TreeOfSpaces(
        [vertex_space] * length, edges, root=0,
        params=params or FamilyParams(0, 2, 0),
        name="twisted:%s" % automorphism,
    )
