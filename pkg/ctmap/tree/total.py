# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

import numpy as np

from ctmap.graph import MetricGraph
from ctmap.logger import logger

FIBER_VERTEX = "vertex"
FIBER_EDGE = "edge"


class Fiber(namedtuple('_Fiber', ['kind', 'index'])):
    """Where a total-space vertex sits over the tree: a vertex or an edge."""

    @property
    def over_vertex(self):
        return self.kind == FIBER_VERTEX

    def __str__(self):
        return "%s%d" % ("v" if self.over_vertex else "e", self.index)


class TotalSpace(object):
    """
    The assembled space ``X``: one copy of every vertex space, one mid copy of
    every edge space, and for each edge-space vertex ``x`` the two rungs
    ``attach_lo(x) - mid(x) - attach_hi(x)``.
    """

    def __init__(self, tos):
        self._tos = tos

        offsets = []
        start = 0
        for space in tos.spaces:
            offsets.append(start)
            start += space.vertex_count
        mids = []
        for e in tos.edges:
            mids.append(start)
            start += e.space.vertex_count

        self._offsets = tuple(offsets)
        self._mids = tuple(mids)

        fibers = []
        labels = []
        edges = []
        for v, space in enumerate(tos.spaces):
            base = offsets[v]
            fibers.extend([Fiber(FIBER_VERTEX, v)] * space.vertex_count)
            labels.extend("v%d:%s" % (v, space.label(x)) for x in range(space.vertex_count))
            edges.extend((base + a, base + b) for a, b in space.edges)

        for i, e in enumerate(tos.edges):
            base = mids[i]
            fibers.extend([Fiber(FIBER_EDGE, i)] * e.space.vertex_count)
            labels.extend("e%d:%s" % (i, e.space.label(x)) for x in range(e.space.vertex_count))
            edges.extend((base + a, base + b) for a, b in e.space.edges)
            for x in range(e.space.vertex_count):
                edges.append((offsets[e.lo] + e.attach_lo[x], base + x))
                edges.append((base + x, offsets[e.hi] + e.attach_hi[x]))

        self._fibers = tuple(fibers)
        self._graph = MetricGraph(start, edges, labels=labels)

        logger.debug("Total space: %d vertices, %d edges", start, self._graph.edge_count)

    @property
    def tos(self):
        return self._tos

    @property
    def graph(self):
        return self._graph

    def projection(self, x):
        """``P(x)``: the tree vertex or edge under ``x``."""
        return self._fibers[x]

    def lift(self, v, x):
        """``i_v(x)``."""
        self._tos.space(v).check_vertex(x)
        return self._offsets[v] + int(x)

    def lift_mid(self, e, x):
        self._tos.edges[e].space.check_vertex(x)
        return self._mids[e] + int(x)

    def fiber_vertices(self, v):
        return range(self._offsets[v], self._offsets[v] + self._tos.space(v).vertex_count)

    def local(self, x):
        """``(fiber, index)`` with ``x`` the lift of ``index`` over ``fiber``."""
        fiber = self._fibers[x]
        base = self._offsets[fiber.index] if fiber.over_vertex else self._mids[fiber.index]
        return fiber, x - base

    def _ends(self, fiber):
        if fiber.over_vertex:
            return (fiber.index,)
        return self._tos.edges[fiber.index].ends

    def tree_distance(self, x, y):
        """
        ``d_T(P(x), P(y))`` on the tree with edge midpoints, so a mid copy
        sits at half distance from the two ends of its edge.
        """
        fx, fy = self._fibers[x], self._fibers[y]
        if fx == fy:
            return Fraction(0)

        base = min(
            self._tos.tree_distance(a, b)
            for a in self._ends(fx) for b in self._ends(fy)
        )
        halves = (0 if fx.over_vertex else 1) + (0 if fy.over_vertex else 1)
        return Fraction(base) + Fraction(halves, 2)


def assemble_total_space(tos):
    return TotalSpace(tos)


def tree_projection_gap(total):
    """
    ``min(d_X(x, y) - d_T(P(x), P(y)))`` over all pairs with a witness pair;
    distances are doubled so mid copies stay integral.
    """
    n = total.graph.vertex_count
    first = {}
    for x in range(n):
        first.setdefault(total.projection(x), x)
    fibers = sorted(first)
    index = {f: i for i, f in enumerate(fibers)}
    reps = [first[f] for f in fibers]

    doubled = np.array([
        [int(2 * total.tree_distance(a, b)) for b in reps] for a in reps
    ], dtype=np.int64)
    fid = np.array([index[total.projection(x)] for x in range(n)])

    gap = 2 * total.graph.distance_matrix - doubled[np.ix_(fid, fid)]
    i, j = np.unravel_index(int(np.argmin(gap)), gap.shape)
    return Fraction(int(gap[i, j]), 2), (int(i), int(j))
