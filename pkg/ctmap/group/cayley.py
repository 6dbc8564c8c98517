# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from ctmap.const import DEFAULT_TILING_MAX_RADIUS
from ctmap.error import NormalFormFailure
from ctmap.graph import MetricGraph
from ctmap.group.model import ModelKind
from ctmap.group.tiling import tiling_ball
from ctmap.logger import logger


def word_ball(model, R):
    """
    Breadth-first closure of the identity under right multiplication by
    generators.  Returns the elements in discovery order and their word
    lengths.
    """
    identity = model.normal_form(model.identity)
    order = [identity]
    length = {identity: 0}
    layer = [identity]

    for radius in range(1, R + 1):
        following = []
        for x in layer:
            for g in model.generators:
                y = model.normal_form(model.multiply(x, g))
                if model.normal_form(y) != y:
                    raise NormalFormFailure(model.label(y))
                if y not in length:
                    length[y] = radius
                    order.append(y)
                    following.append(y)
        layer = following
        logger.debug("%s: shell %d has %d elements", model, radius, len(layer))

    return order, length


def cayley_ball(model, R, tiling_cap=DEFAULT_TILING_MAX_RADIUS):
    """The ball of radius ``R`` about the identity in the Cayley graph."""
    if model.kind is ModelKind.SURFACE_TILING:
        return tiling_ball(model.p, model.q, R, cap=tiling_cap)

    order, _ = word_ball(model, R)
    index = {x: i for i, x in enumerate(order)}

    edges = set()
    for i, x in enumerate(order):
        for g in model.generators:
            j = index.get(model.normal_form(model.multiply(x, g)))
            if j is not None and j != i:
                edges.add((min(i, j), max(i, j)))

    labels = [model.label(x) for x in order]
    return MetricGraph(len(order), sorted(edges), labels=labels)
