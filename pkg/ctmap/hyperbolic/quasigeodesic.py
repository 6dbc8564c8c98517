# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from ctmap.const import QI_GRID_DENOMINATOR
from ctmap.const import QI_GRID_MAX_K
from ctmap.error import NotAPath
from ctmap.error import OutOfOrder
from ctmap.graph import gromov_product
from ctmap.hyperbolic.audit import AUDIT_CONCAT
from ctmap.hyperbolic.audit import AUDIT_INNER_PRODUCT
from ctmap.hyperbolic.audit import AuditResult
from ctmap.hyperbolic.audit import concat_budget
from ctmap.hyperbolic.audit import inner_product_budget
from ctmap.hyperbolic.projection import nearest_point_position


class QIEstimate(namedtuple('_QIEstimate', ['K', 'epsilon'])):
    def __new__(cls, K, epsilon):
        return super(QIEstimate, cls).__new__(cls, Fraction(K), Fraction(epsilon))

    def within(self, other):
        return self.K <= other.K and self.epsilon <= other.epsilon

    def __str__(self):
        return "K=%s eps=%s" % (self.K, self.epsilon)


def k_grid():
    steps = (QI_GRID_MAX_K - 1) * QI_GRID_DENOMINATOR
    return [
        Fraction(QI_GRID_DENOMINATOR + i, QI_GRID_DENOMINATOR)
        for i in range(steps + 1)
    ]


def _round_up(value):
    return Fraction(math.ceil(value))


def _epsilon(lowest, highest, K):
    eps = Fraction(0)
    for d, image in lowest.items():
        eps = max(eps, Fraction(d) / K - image)
    for d, image in highest.items():
        eps = max(eps, image - K * d)
    return _round_up(eps)


def estimate_qi(d, d_image, eps_cap):
    """
    Grid-minimal ``(K, epsilon)`` with
    ``d / K - epsilon <= d_image <= K * d + epsilon`` for every pair.

    ``K`` runs over the quarter grid from 1 to 16 and ``epsilon`` is a
    whole number; the first ``K`` whose least ``epsilon`` is within ``eps_cap`` wins.  Without such ``K`` the
    estimate at ``K = 16`` is returned.
    """
    d = np.asarray(d, dtype=np.int64).ravel()
    d_image = np.asarray(d_image, dtype=np.int64).ravel()

    lowest = {}
    highest = {}
    if d.size:
        for a, b in np.unique(np.stack([d, d_image], axis=1), axis=0):
            a, b = int(a), int(b)
            lowest[a] = min(lowest.get(a, b), b)
            highest[a] = max(highest.get(a, b), b)

    grid = k_grid()
    for K in grid:
        eps = _epsilon(lowest, highest, K)
        if eps <= eps_cap:
            return QIEstimate(K, eps)

    return QIEstimate(grid[-1], _epsilon(lowest, highest, grid[-1]))


def check_path(g, path):
    path = [int(v) for v in path]
    for v in path:
        g.check_vertex(v)
    for i in range(len(path) - 1):
        if path[i + 1] not in g.adjacency[path[i]]:
            raise NotAPath(i, path[i], path[i + 1])
    return path


def quasigeodesic_params(g, path):
    path = check_path(g, path)

    positions = np.arange(len(path))
    d = np.abs(positions[:, None] - positions[None, :])
    d_image = np.vstack([g.distances_from(v)[path] for v in path])

    return estimate_qi(d, d_image, eps_cap=g.diameter)


def concat_path(g, x, mu, z_index):
    """``[x, y]`` followed by the part of ``mu`` from ``y`` to ``mu[z_index]``."""
    if not 0 <= z_index < len(mu):
        raise OutOfOrder(0, z_index, len(mu))

    py = nearest_point_position(g, x, mu)
    head = g.geodesic(x, mu[py]).vertices
    if z_index >= py:
        tail = mu.vertices[py:z_index + 1]
    else:
        tail = tuple(reversed(mu.vertices[z_index:py + 1]))

    return list(head) + list(tail[1:])


def concat_projection_check(g, x, mu, z_index, delta, budget=None):
    path = concat_path(g, x, mu, z_index)
    estimate = quasigeodesic_params(g, path)

    if budget is None:
        budget = QIEstimate(*concat_budget(delta))

    return AuditResult(
        AUDIT_CONCAT,
        mu.digest,
        estimate,
        budget,
        estimate.within(budget),
        witness=(x, z_index),
    )


def inner_product_bound_audit(g, path, p, q, r, delta=0, estimate=None,
                              budget=None):
    if not p < q < r:
        raise OutOfOrder(p, q, r)

    path = check_path(g, path)
    if r >= len(path) or p < 0:
        raise OutOfOrder(p, q, r)

    value = gromov_product(g, path[p], path[r], path[q])

    if budget is None:
        if estimate is None:
            estimate = quasigeodesic_params(g, path)
        budget = inner_product_budget(estimate.K, estimate.epsilon, delta)

    return AuditResult(
        AUDIT_INNER_PRODUCT,
        g.digest[:16],
        value,
        budget,
        value <= budget,
        witness=(p, q, r),
    )
