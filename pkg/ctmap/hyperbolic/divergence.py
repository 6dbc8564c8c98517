# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import math
from collections import namedtuple

import networkx as nx
import numpy as np

from ctmap.error import PreconditionViolated
from ctmap.graph import gromov_product
from ctmap.hyperbolic.audit import AUDIT_DIVERGENCE
from ctmap.hyperbolic.audit import AuditResult
from ctmap.hyperbolic.audit import divergence_budget


class DivergenceProfile(namedtuple(
        '_DivergenceProfile', [
            'rows',
            'slope',
        ])):
    """
    :param rows: ``(D, length)`` pairs; ``length`` is None when every path
        from x to w meets the D-neighbourhood of ``[y, z]``
    :param slope: least-squares slope of ``log(length)`` against ``D`` over
        the rows with a positive length, or None with fewer than two of them
    """

    @property
    def finite(self):
        return [(D, length) for D, length in self.rows if length is not None]

    def audit(self, digest, min_slope=None):
        if min_slope is None:
            min_slope = divergence_budget()
        passed = self.slope is not None and self.slope > float(min_slope)
        measured = "none" if self.slope is None else "%.6f" % self.slope
        return AuditResult(AUDIT_DIVERGENCE, digest, measured, min_slope, passed)


def divergence_profile(g, x, y, z, w, A0, B=1):
    """
    Shortest ``x``-``w`` path lengths avoiding growing neighbourhoods of
    ``[y, z]``.
    """
    xz = gromov_product(g, x, z, y)
    if xz > A0:
        raise PreconditionViolated("(x,z)_y = %s > A0 = %s" % (xz, A0))
    yw = gromov_product(g, y, w, z)
    if yw > A0:
        raise PreconditionViolated("(y,w)_z = %s > A0 = %s" % (yw, A0))
    if g.distance(y, z) < B:
        raise PreconditionViolated("d(y,z) = %d < B = %d" % (g.distance(y, z), B))

    seg = g.geodesic(y, z)
    reach, _ = g.nearest(seg.vertices)
    top = min(int(reach[x]), int(reach[w])) - 1

    rows = []
    for D in range(top + 1):
        kept = [int(v) for v in np.nonzero(reach > D)[0]]
        try:
            length = nx.shortest_path_length(g.nx.subgraph(kept), x, w)
        except nx.NetworkXNoPath:
            length = None
        rows.append((D, length))

    # x == w gives length 0, which has no logarithm
    positive = [(D, length) for D, length in rows if length]
    slope = None
    if len(positive) >= 2:
        ds = np.array([D for D, _ in positive], dtype=float)
        logs = np.array([math.log(length) for _, length in positive])
        slope = float(np.polyfit(ds, logs, 1)[0])

    return DivergenceProfile(rows, slope)


def spread_quadruple(g):
    """
    ``(x, y, z, w)`` on the canonical geodesic between the first pair at
    the diameter: ``x`` and ``w`` are its ends, ``y`` and ``z`` one step
    either side of its middle.
    """
    d = g.distance_matrix
    x, w = (int(v) for v in np.argwhere(d == d.max())[0])
    mu = g.geodesic(x, w).vertices
    mid = len(mu) // 2
    return x, mu[max(mid - 1, 0)], mu[min(mid + 1, len(mu) - 1)], w
