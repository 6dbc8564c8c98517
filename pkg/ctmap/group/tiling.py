# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import math

import numpy as np

from ctmap.const import DEFAULT_TILING_MAX_RADIUS
from ctmap.error import InvalidSpecification
from ctmap.error import NotHyperbolicTiling
from ctmap.graph import MetricGraph
from ctmap.logger import logger

# hyperbolic separation below which two disc points are the same vertex
SAME_POINT = 1e-6


def _rotation(theta):
    return np.array([
        [np.exp(0.5j * theta), 0],
        [0, np.exp(-0.5j * theta)],
    ])


def _translation(length):
    c, s = math.cosh(length / 2), math.sinh(length / 2)
    return np.array([[c, s], [s, c]], dtype=complex)


def edge_length(p, q):
    """Hyperbolic length of an edge of the regular {p,q} tiling."""
    return 2 * math.acosh(math.cos(math.pi / p) / math.sin(math.pi / q))


def _point(frame):
    return frame[0, 1] / frame[1, 1]


def _separation(points, z):
    """``cosh(d) - 1`` between ``z`` and each of ``points`` in the disc."""
    gap = np.abs(points - z) ** 2
    return 2 * gap / ((1 - np.abs(points) ** 2) * (1 - abs(z) ** 2))


def tiling_ball(p, q, R, cap=DEFAULT_TILING_MAX_RADIUS):
    """
    1-skeleton of the {p,q} tiling up to combinatorial radius ``R``.

    Vertices are placed in the Poincare disc by Mobius frames; the neighbour
    ``k`` of a vertex with frame ``M`` has frame
    ``M . rot(2 pi k / q) . shift(edge) . rot(pi)``, so its direction 0
    points back along the edge.  Numbering follows breadth-first discovery.
    """
    if (p - 2) * (q - 2) <= 4:
        raise NotHyperbolicTiling(p, q)
    if R < 0 or R > cap:
        raise InvalidSpecification(
            "Tiling radius %d outside 0..%d (tiling/max_radius)" % (R, cap))

    step = [
        _rotation(2 * math.pi * k / q).dot(_translation(edge_length(p, q))).dot(
            _rotation(math.pi))
        for k in range(q)
    ]

    frames = [np.eye(2, dtype=complex)]
    points = [0j]
    layers = [0]
    edges = set()

    head = 0
    while head < len(frames):
        frame = frames[head]
        known = np.asarray(points)

        for move in step:
            child = frame.dot(move)
            z = _point(child)

            near = _separation(known, z)
            j = int(np.argmin(near))
            if near[j] >= SAME_POINT:
                if layers[head] >= R:
                    continue
                frames.append(child)
                points.append(z)
                layers.append(layers[head] + 1)
                j = len(points) - 1
                known = np.asarray(points)

            if j != head:
                edges.add((min(head, j), max(head, j)))

        head += 1

    logger.debug("{%d,%d} ball of radius %d: %d vertices", p, q, R, len(points))
    return MetricGraph(len(points), sorted(edges))
