# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from ctmap.const import DEFAULT_EXHAUSTIVE_CAP
from ctmap.const import MODE_CANONICAL
from ctmap.const import MODE_EXHAUSTIVE
from ctmap.error import EmptySet
from ctmap.error import GraphTooLarge
from ctmap.error import InvalidSpecification
from ctmap.logger import logger


def quasiconvexity_constant(g, S, mode=MODE_CANONICAL,
                            cap=DEFAULT_EXHAUSTIVE_CAP):
    """
    Least ``k`` such that geodesics between points of ``S`` stay within
    ``k`` of ``S``.  Canonical mode checks the canonical geodesic of each
    ordered pair; exhaustive mode checks every vertex lying on any geodesic.
    """
    S = sorted(set(int(v) for v in S))
    if not S:
        raise EmptySet()

    if mode not in (MODE_CANONICAL, MODE_EXHAUSTIVE):
        raise InvalidSpecification("Unknown mode: %s" % mode)

    if mode == MODE_EXHAUSTIVE and g.vertex_count > cap:
        raise GraphTooLarge(g.vertex_count, cap, "use canonical mode")

    reach, _ = g.nearest(S)
    if reach.max() == 0:
        return 0

    k = 0
    for a in S:
        for b in S:
            if a == b:
                continue
            if mode == MODE_CANONICAL:
                k = max(k, int(reach[list(g.geodesic(a, b).vertices)].max()))
            else:
                k = max(k, int(reach[g.interval(a, b)].max()))

    logger.debug("Quasiconvexity of %d vertices (%s): %d", len(S), mode, k)
    return k
