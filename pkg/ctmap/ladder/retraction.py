# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

import numpy as np
from cached_property import cached_property

from ctmap.const import DEFAULT_EXHAUSTIVE_CAP
from ctmap.const import MODE_CANONICAL
from ctmap.error import LadderTrivial
from ctmap.hyperbolic import projection_positions
from ctmap.hyperbolic import quasiconvexity_constant
from ctmap.logger import logger

CASE_SAME_FIBER = "a"
CASE_OVER_SUPPORT = "b"
CASE_OUTSIDE = "c"

Displacement = namedtuple('Displacement', ['value', 'witness'])

VerticalBound = namedtuple('VerticalBound', ['A', 'witness'])


class RetractionReport(namedtuple(
        '_RetractionReport', [
            'lipschitz_C0',
            'witness_pair',
            'quasiconvexity_Cprime',
            'vertical_A',
            'cases',
            'fixes_ladder',
        ])):
    """Measured constants of the retraction onto a ladder."""

    def rows(self):
        out = [
            ["C0", str(self.lipschitz_C0),
             "%d-%d" % self.witness_pair if self.witness_pair else ""],
            ["Cprime", str(self.quasiconvexity_Cprime), ""],
            ["A", str(self.vertical_A), ""],
        ]
        for case in sorted(self.cases):
            d = self.cases[case]
            witness = "%d-%d" % d.witness if d.witness else ""
            out.append(["case_%s" % case, str(d.value), witness])
        out.append(["fixes_ladder", "yes" if self.fixes_ladder else "no", ""])
        return out


class Retraction(object):
    """
    ``Pi_lambda`` on the total space: fibres over the support tree project
    onto their segment, everything else first moves to the nearest vertex
    over the support tree (lowest id on ties).
    """

    def __init__(self, ladder):
        self._ladder = ladder
        self._total = ladder.total
        self._tos = ladder.tos

    @property
    def ladder(self):
        return self._ladder

    def _project_in_fiber(self, v, x):
        seg = self._ladder.segment(v)
        pos = self._positions[v][x]
        return self._total.lift(v, seg[int(pos)])

    @cached_property
    def _positions(self):
        return {
            v: projection_positions(self._tos.space(v), seg)
            for v, seg in self._ladder.segments.items()
        }

    @cached_property
    def table(self):
        total = self._total
        support = self._ladder.support

        targets = []
        for v in sorted(support):
            targets.extend(total.fiber_vertices(v))
        targets.sort()
        _, owner = total.graph.nearest(targets)

        out = np.empty(total.graph.vertex_count, dtype=np.int64)
        for x in range(total.graph.vertex_count):
            fiber, local = total.local(x)
            if not (fiber.over_vertex and fiber.index in support):
                fiber, local = total.local(targets[owner[x]])
            out[x] = self._project_in_fiber(fiber.index, local)
        out.setflags(write=False)
        return out

    def __call__(self, x):
        self._total.graph.check_vertex(x)
        return int(self.table[x])


def retract(tos, total, ladder, x):
    return Retraction(ladder)(x)


def _over_support(total, ladder, x):
    fiber = total.projection(x)
    if fiber.over_vertex:
        return fiber.index in ladder.support
    return all(v in ladder.support for v in ladder.tos.edges[fiber.index].ends)


def _case(total, ladder, u, w):
    fu, fw = total.projection(u), total.projection(w)
    if fu == fw and fu.over_vertex and fu.index in ladder.support:
        return CASE_SAME_FIBER
    if _over_support(total, ladder, u) and _over_support(total, ladder, w):
        return CASE_OVER_SUPPORT
    return CASE_OUTSIDE


def audit_retraction_lipschitz(tos, total, ladder, retraction=None):
    """
    Largest ``d(Pi(x), Pi(y))`` over adjacent ``x, y`` of the total space,
    overall and per edge case.  Returns ``(C0, witness, cases)``.
    """
    retraction = retraction or Retraction(ladder)
    table = retraction.table
    graph = total.graph

    best = Displacement(0, None)
    cases = {}
    for u, w in graph.edges:
        jump = int(graph.distances_from(int(table[u]))[table[w]])
        case = _case(total, ladder, u, w)
        if case not in cases or jump > cases[case].value:
            cases[case] = Displacement(jump, (u, w))
        if best.witness is None or jump > best.value:
            best = Displacement(jump, (u, w))

    logger.debug("Retraction C0=%d at %s", best.value, best.witness)
    return best.value, best.witness, cases


def audit_quasiconvexity(tos, total, ladder, mode=MODE_CANONICAL,
                         cap=DEFAULT_EXHAUSTIVE_CAP):
    return quasiconvexity_constant(total.graph, ladder.vertices, mode=mode, cap=cap)


def audit_vertical_bound(tos, total, ladder):
    """
    ``A``: the largest ratio of the distance from a ladder vertex off the
    root fibre to ``i(lambda)``, over its tree distance to the root.
    """
    if ladder.trivial:
        raise LadderTrivial()

    dist, _ = total.graph.nearest(ladder.root_vertices)
    root = tos.root

    best = VerticalBound(Fraction(0), None)
    for a in ladder.vertices:
        fiber = total.projection(a)
        if fiber.index == root:
            continue
        ratio = Fraction(int(dist[a]), tos.tree_distance(fiber.index, root))
        if best.witness is None or ratio > best.A:
            best = VerticalBound(ratio, a)

    return best


def retraction_report(tos, total, ladder, mode=MODE_CANONICAL,
                      cap=DEFAULT_EXHAUSTIVE_CAP):
    retraction = Retraction(ladder)
    C0, witness, cases = audit_retraction_lipschitz(tos, total, ladder, retraction)
    Cprime = audit_quasiconvexity(tos, total, ladder, mode=mode, cap=cap)

    try:
        A = audit_vertical_bound(tos, total, ladder).A
    except LadderTrivial as e:
        logger.info("%s", e)
        A = Fraction(0)

    fixes = all(retraction(x) == x for x in ladder.vertices)
    if not fixes:
        logger.warning("Retraction moves a ladder vertex")

    return RetractionReport(C0, witness, Cprime, A, cases, fixes)
