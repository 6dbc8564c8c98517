# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple

import numpy as np
from tqdm import tqdm

from ctmap.const import DEFAULT_CALIBRATE_CAP
from ctmap.const import DEFAULT_CALIBRATE_MAX_D
from ctmap.const import DEFAULT_CALIBRATE_SAMPLES
from ctmap.error import CalibrationFailed
from ctmap.error import GraphTooLarge
from ctmap.logger import logger

PerpsConstants = namedtuple('PerpsConstants', ['D', 'C1', 'delta_used'])


def _feet(g, b, c):
    """Vertices whose nearest point on ``[b, c]`` can be taken as ``b``."""
    seg = g.geodesic(b, c)
    reach, _ = g.nearest(seg.vertices)
    d = g.distance_matrix
    near_b = np.nonzero(d[b] == reach)[0]
    near_c = np.nonzero(d[c] == reach)[0]
    return seg, near_b, near_c


def _radius(g, a, seg, d_vertex):
    """How far ``[a,b] + [b,c] + [c,d]`` strays from ``[a,d]``."""
    dist = g.distance_matrix
    union = set(g.geodesic(a, seg.start).vertices)
    union.update(seg.vertices)
    union.update(g.geodesic(seg.end, d_vertex).vertices)
    target = list(g.geodesic(a, d_vertex).vertices)
    return int(dist[np.ix_(sorted(union), target)].min(axis=1).max())


def _records(g, samples, seed, progress=False):
    pairs = []
    weights = []
    for b in range(g.vertex_count):
        for c in range(g.vertex_count):
            if b == c:
                continue
            seg, near_b, near_c = _feet(g, b, c)
            overlap = len(np.intersect1d(near_b, near_c))
            count = len(near_b) * len(near_c) - overlap
            if count > 0:
                pairs.append((seg, near_b, near_c))
                weights.append(count)

    total = sum(weights)
    records = []

    if total <= samples:
        logger.debug("Enumerating all %d admissible quadruples", total)
        for seg, near_b, near_c in tqdm(pairs, desc="perps", leave=False,
                                        disable=not progress):
            for a in near_b:
                for d in near_c:
                    if a != d:
                        records.append((seg.length, _radius(g, int(a), seg, int(d))))
        return records

    logger.debug("Sampling %d of %d admissible quadruples", samples, total)
    rng = np.random.default_rng(seed)
    p = np.asarray(weights, dtype=float) / total
    while len(records) < samples:
        seg, near_b, near_c = pairs[int(rng.choice(len(pairs), p=p))]
        a = int(rng.choice(near_b))
        d = int(rng.choice(near_c))
        if a != d:
            records.append((seg.length, _radius(g, a, seg, d)))

    return records


def calibrate_perps(g, delta, cap=DEFAULT_CALIBRATE_CAP,
                    samples=DEFAULT_CALIBRATE_SAMPLES,
                    max_d=DEFAULT_CALIBRATE_MAX_D, seed=0, progress=False):
    """
    Measure the neighbourhood radius ``C1`` for quadruples ``(a, b, c, d)``
    where ``b`` is a nearest point of ``[b, c]`` to ``a`` and ``c`` one to
    ``d``, restricted to ``d(b, c) >= D``.  ``D`` doubles from 1 until two
    consecutive values give the same ``C1``.
    """
    if g.vertex_count > cap:
        raise GraphTooLarge(g.vertex_count, cap, "raise calibrate/cap")

    records = np.asarray(_records(g, samples, seed, progress=progress),
                         dtype=np.int64).reshape(-1, 2)

    def c1(D):
        chosen = records[records[:, 0] >= D]
        if chosen.size == 0:
            return None
        return int(chosen[:, 1].max())

    history = []
    D = 1
    current = c1(D)
    while current is not None and D <= max_d:
        history.append((D, current))
        following = c1(2 * D)
        if following is None:
            break
        if following == current:
            logger.debug("Perps stabilised at D=%d, C1=%d", D, current)
            return PerpsConstants(D, current, delta)
        D, current = 2 * D, following

    raise CalibrationFailed(history)
