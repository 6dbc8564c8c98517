# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from fractions import Fraction

import numpy as np

from ctmap.error import MapNotDefinedOnVertex
from ctmap.error import PreconditionViolated
from ctmap.hyperbolic.audit import AUDIT_COMPAT
from ctmap.hyperbolic.audit import AUDIT_LIPSCHITZ
from ctmap.hyperbolic.audit import AuditResult
from ctmap.hyperbolic.audit import compat_budget
from ctmap.hyperbolic.audit import lipschitz_budget


def nearest_point_position(g, x, mu):
    """Position on ``mu`` of the nearest vertex to ``x``, earliest on ties."""
    mu.check_graph(g)
    row = g.distances_from(x)
    return int(np.argmin(row[list(mu.vertices)]))


def nearest_point_projection(g, x, mu):
    return mu[nearest_point_position(g, x, mu)]


def projection_positions(g, mu):
    """For every vertex of ``g``, its projection position on ``mu``."""
    mu.check_graph(g)
    rows = np.vstack([g.distances_from(m) for m in mu.vertices])
    return np.argmin(rows, axis=0)


def projection_lipschitz_audit(g, mu, delta, budget=None):
    """
    Largest displacement ``d(pi(x), pi(y))`` over the edges of ``g``.  The
    projections lie on a geodesic, so their distance is the gap between
    positions.
    """
    positions = projection_positions(g, mu)

    best = -1
    witness = None
    for u, v in g.edges:
        jump = abs(int(positions[u]) - int(positions[v]))
        if jump > best:
            best = jump
            witness = (u, v)

    if budget is None:
        budget = lipschitz_budget(delta)

    return AuditResult(
        AUDIT_LIPSCHITZ,
        mu.digest,
        max(best, 0),
        budget,
        best <= budget,
        witness=witness,
    )


def check_declared_qi(g, target, phi, points, params):
    """
    Raise :class:`PreconditionViolated` unless
    ``d / K - eps <= d(phi p, phi p') <= K d + eps`` on every pair of
    ``points``.
    """
    K, eps = Fraction(params.K), Fraction(params.epsilon)
    points = sorted(points)
    for i, p in enumerate(points):
        row = g.distances_from(p)
        image = target.distances_from(phi[p])
        for other in points[i + 1:]:
            d, d_image = int(row[other]), int(image[phi[other]])
            if not d / K - eps <= d_image <= K * d + eps:
                raise PreconditionViolated(
                    "phi is not (%s, %s) on %d, %d: distance %d becomes %d" % (
                        K, eps, p, other, d, d_image))


def projection_compat_audit(g, phi, phi_params, mu1, sample, delta,
                            target=None, budget=None):
    """
    For each ``p`` in ``sample``: ``q`` projects ``p`` to ``mu1`` and ``r``
    projects ``phi(p)`` to ``mu2 = [phi(a), phi(b)]``.  Measures the largest
    ``d(r, phi(q))``.

    ``phi`` is a mapping from vertices of ``g`` to vertices of ``target``
    (``g`` itself by default).  It must meet ``phi_params`` on the sample
    and the ends of ``mu1``.
    """
    target = target if target is not None else g

    for v in (mu1.start, mu1.end):
        if v not in phi:
            raise MapNotDefinedOnVertex(v)

    for p in sample:
        if p not in phi:
            raise MapNotDefinedOnVertex(p)
    check_declared_qi(g, target, phi,
                      set(sample) | {mu1.start, mu1.end}, phi_params)

    mu2 = target.geodesic(phi[mu1.start], phi[mu1.end])
    identity = target is g and all(phi[v] == v for v in phi)

    best = -1
    witness = None
    for p in sorted(sample):
        q = nearest_point_projection(g, p, mu1)
        if q not in phi:
            raise MapNotDefinedOnVertex(q)

        r = nearest_point_projection(target, phi[p], mu2)
        gap = target.distance(r, phi[q])
        if gap > best:
            best = gap
            witness = (p, q, r)

    if budget is None:
        budget = compat_budget(
            phi_params.K, phi_params.epsilon, delta, identity=identity)

    return AuditResult(
        AUDIT_COMPAT,
        mu1.digest,
        max(best, 0),
        budget,
        best <= budget,
        witness=witness,
    )
