# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import hashlib
from collections import deque
from collections import namedtuple

import numpy as np

from ctmap.const import MODE_CANONICAL
from ctmap.error import ConstantsNegative
from ctmap.hyperbolic import calibrate_perps
from ctmap.hyperbolic import quasiconvexity_constant
from ctmap.logger import logger
from ctmap.tree.maps import capital_phi

LadderStep = namedtuple('LadderStep', ['vertex', 'parent', 'segment', 'p', 'q'])

Provenance = namedtuple('Provenance', ['parent', 'p', 'q', 'generation'])

LadderConstants = namedtuple('LadderConstants', ['C', 'D', 'C1', 'C2'])


def _check_constants(C, D):
    if C < 0 or D < 0:
        raise ConstantsNegative(C, D)


def _widest_pair(space, candidates):
    """Lexicographically least pair of ``candidates`` at maximal distance."""
    if len(candidates) < 2:
        return None, None, 0

    d = np.array(space.distance_matrix[np.ix_(candidates, candidates)])
    d[np.tril_indices(len(candidates))] = -1
    i, j = np.unravel_index(int(np.argmax(d)), d.shape)
    return candidates[i], candidates[j], int(d[i, j])


def build_b1(tos, total, v, mu, C, D):
    """
    One propagation step from the tree vertex ``v``: for every child edge,
    the widest pair ``(p, q)`` of its attach image within ``C`` of ``mu``
    is carried across when ``d_v(p, q) > D``.
    """
    _check_constants(C, D)

    space = tos.space(v)
    mu.check_graph(space)
    reach, _ = space.nearest(mu.vertices)

    steps = []
    for e in tos.child_edges(v):
        child = e.other(v)
        image = sorted(set(e.attach(v)))
        candidates = [y for y in image if reach[y] <= C]

        p, q, width = _widest_pair(space, candidates)
        if width <= D:
            logger.debug("Edge %s: width %d <= D=%d, child %d dropped", e, width, D, child)
            continue

        segment = capital_phi(tos, child, space.geodesic(p, q))
        steps.append(LadderStep(child, v, segment, p, q))

    return steps


class Ladder(object):
    """
    The set ``B_lambda``: one geodesic segment per vertex of the support
    tree, each with the step that produced it.
    """

    def __init__(self, tos, total, base, segments, provenance, C, D):
        self._tos = tos
        self._total = total
        self._base = base
        self._segments = dict(sorted(segments.items()))
        self._provenance = dict(sorted(provenance.items()))
        self._C = C
        self._D = D

    @property
    def tos(self):
        return self._tos

    @property
    def total(self):
        return self._total

    @property
    def base(self):
        return self._base

    @property
    def segments(self):
        return self._segments

    @property
    def provenance(self):
        return self._provenance

    @property
    def support(self):
        return frozenset(self._segments)

    @property
    def C(self):
        return self._C

    @property
    def D(self):
        return self._D

    def segment(self, v):
        return self._segments[v]

    def generation(self, v):
        return self._provenance[v].generation

    @property
    def trivial(self):
        return len(self._segments) == 1

    @property
    def root_vertices(self):
        root = self._tos.root
        return [self._total.lift(root, x) for x in self._segments[root].vertices]

    @property
    def vertices(self):
        """Sorted total-space vertices of ``B_lambda``."""
        out = set()
        for v, seg in self._segments.items():
            out.update(self._total.lift(v, x) for x in seg.vertices)
        return sorted(out)

    @property
    def digest(self):
        h = hashlib.sha256()
        for v, seg in self._segments.items():
            h.update(("%d:%s;" % (v, seg.digest)).encode("utf-8"))
        return h.hexdigest()[:16]

    def dump(self):
        """Plain mapping of the ladder, ready for a YAML writer."""
        out = {
            'C': int(self._C),
            'D': int(self._D),
            'base': list(self._base.vertices),
            'vertices': [],
        }
        for v, seg in self._segments.items():
            prov = self._provenance[v]
            entry = {
                'vertex': v,
                'generation': prov.generation,
                'segment': list(seg.vertices),
            }
            if prov.parent is not None:
                entry['parent'] = prov.parent
                entry['pair'] = [prov.p, prov.q]
            out['vertices'].append(entry)
        return out

    def __repr__(self):
        return "Ladder(support=%s, C=%s, D=%s)" % (
            sorted(self._segments), self._C, self._D)


def build_ladder(tos, total, base, C, D):
    """
    Propagate ``base`` (a geodesic of the root space) through the tree,
    breadth first, until no vertex emits a new segment.
    """
    _check_constants(C, D)

    root = tos.root
    base.check_graph(tos.space(root))

    segments = {root: base}
    provenance = {root: Provenance(None, None, None, 0)}
    pending = deque([root])

    while pending:
        v = pending.popleft()
        generation = provenance[v].generation
        for step in build_b1(tos, total, v, segments[v], C, D):
            segments[step.vertex] = step.segment
            provenance[step.vertex] = Provenance(v, step.p, step.q, generation + 1)
            pending.append(step.vertex)

    logger.debug("Ladder over %d tree vertices (C=%s, D=%s)", len(segments), C, D)
    return Ladder(tos, total, base, segments, provenance, C, D)


def attach_quasiconvexity(tos, mode=MODE_CANONICAL):
    """Largest quasiconvexity constant of an attach image in its vertex space."""
    worst = 0
    for e in tos.edges:
        for side in e.ends:
            worst = max(worst, quasiconvexity_constant(
                tos.space(side), e.attach(side), mode=mode))
    return worst


def ladder_constants(tos, **kwargs):
    """
    ``C = C1 + C2`` with ``C1`` calibrated on the root space and ``C2`` the
    attach image quasiconvexity; ``D`` comes from the same calibration.
    Keyword arguments go to the calibration.
    """
    perps = calibrate_perps(tos.space(tos.root), tos.params.delta, **kwargs)
    C2 = attach_quasiconvexity(tos)
    return LadderConstants(perps.C1 + C2, perps.D, perps.C1, C2)
