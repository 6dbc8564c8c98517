# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction
from math import comb

import numpy as np
from tqdm import tqdm

from ctmap.const import DEFAULT_DELTA_CAP
from ctmap.const import DEFAULT_NET_JOIN_RADIUS
from ctmap.error import GraphTooLarge
from ctmap.graph.graph import MetricGraph
from ctmap.logger import logger


class HyperbolicityReport(namedtuple(
        '_HyperbolicityReport', [
            'delta',
            'witness',
            'quadruples_scanned',
            'sampled',
        ])):
    """
    :param delta: four-point delta as an exact half-integer
    :param witness: quadruple of vertex ids attaining ``delta``
    :param quadruples_scanned: how many unordered quadruples the result covers
    :param sampled: whether the quadruples were drawn at random
    """

    def __new__(cls, delta, witness, quadruples_scanned, sampled=False):
        return super(HyperbolicityReport, cls).__new__(
            cls, delta, tuple(int(v) for v in witness), quadruples_scanned, sampled
        )


def four_point_defect(g, x, y, z, w):
    """Half the gap between the two largest of the three pair sums."""
    for v in (x, y, z, w):
        g.check_vertex(v)
    rows = {v: g.distances_from(v) for v in (x, y, z)}
    sums = sorted([
        int(rows[x][y]) + int(rows[z][w]),
        int(rows[x][z]) + int(rows[y][w]),
        int(rows[x][w]) + int(rows[y][z]),
    ], reverse=True)
    return Fraction(sums[0] - sums[1], 2)


def _scan_exhaustive(g, progress=False):
    n = g.vertex_count
    d = g.distance_matrix

    best = -1
    witness = None

    pairs = [(x, y) for x in range(n) for y in range(x + 1, n - 2)]
    for x, y in tqdm(pairs, desc="delta", leave=False, disable=not progress):
        rest = np.arange(y + 1, n)
        dxy = int(d[x, y])

        # rows index z, columns index w
        s1 = dxy + d[np.ix_(rest, rest)]
        s2 = d[x, rest][:, None] + d[y, rest][None, :]
        s3 = d[x, rest][None, :] + d[y, rest][:, None]

        sums = np.sort(np.stack([s1, s2, s3]), axis=0)
        gap = sums[2] - sums[1]
        gap = np.where(np.triu(np.ones_like(gap, dtype=bool), k=1), gap, -1)

        flat = int(np.argmax(gap))
        value = int(gap.flat[flat])
        if value > best:
            best = value
            i, j = divmod(flat, len(rest))
            witness = (x, y, int(rest[i]), int(rest[j]))

    return Fraction(best, 2), witness, comb(n, 4)


def _scan_sampled(g, samples, seed):
    n = g.vertex_count
    d = g.distance_matrix
    rng = np.random.default_rng(seed)

    quads = np.sort(np.array([
        rng.choice(n, 4, replace=False) for _ in range(samples)
    ]), axis=1)
    x, y, z, w = quads.T

    sums = np.sort(np.stack([
        d[x, y] + d[z, w],
        d[x, z] + d[y, w],
        d[x, w] + d[y, z],
    ]), axis=0)
    gap = sums[2] - sums[1]
    best = int(gap.max())

    winners = quads[gap == best]
    order = np.lexsort(winners.T[::-1])
    witness = tuple(int(v) for v in winners[order[0]])

    return Fraction(best, 2), witness, samples


def delta_four_point(g, cap=DEFAULT_DELTA_CAP, sample=None, seed=0,
                     progress=False):
    """
    Four-point hyperbolicity constant of ``g``.

    The exhaustive scan visits quadruples ``x < y < z < w`` in lexicographic
    order and keeps only strict improvements, so the witness is the
    lexicographically smallest maximiser.  With ``sample`` set, that many
    quadruples are drawn with a seeded generator instead.
    """
    n = g.vertex_count

    if n < 4:
        witness = list(range(n)) + [n - 1] * (4 - n)
        return HyperbolicityReport(Fraction(0), witness, 0, False)

    if sample is not None:
        logger.debug("Sampling %d quadruples with seed %d", sample, seed)
        delta, witness, scanned = _scan_sampled(g, sample, seed)
        return HyperbolicityReport(delta, witness, scanned, True)

    # connected with n - 1 edges: every quadruple has defect 0, and the
    # scan would report the first one
    if g.is_tree:
        logger.debug("Tree on %d vertices: delta is 0", n)
        return HyperbolicityReport(Fraction(0), (0, 1, 2, 3), comb(n, 4), False)

    if cap is not None and n > cap:
        raise GraphTooLarge(n, cap, "use --sample to draw quadruples instead")

    logger.debug("Scanning %d quadruples on %d vertices", comb(n, 4), n)
    delta, witness, scanned = _scan_exhaustive(g, progress=progress)
    return HyperbolicityReport(delta, witness, scanned, False)


class NetApproximation(namedtuple(
        '_NetApproximation', [
            'graph',
            'centers',
            'correspondence',
        ])):
    """
    :param graph: the net graph, vertex ``i`` standing for ``centers[i]``
    :param centers: the selected vertices of the source graph, ascending
    :param correspondence: per source vertex, the net vertex it maps to
    """

    def qi_defects(self, source, K=4):
        """
        ``(upper, lower)`` with ``upper = max(d_net - d)`` and
        ``lower = max(d / K - d_net)`` over all source pairs.
        """
        corr = np.asarray(self.correspondence)
        dn = self.graph.distance_matrix[np.ix_(corr, corr)]
        dg = source.distance_matrix
        upper = int((dn - dg).max())
        lower = Fraction(int((dg - K * dn).max()), K)
        return upper, lower


def net_approximation(g, join_radius=DEFAULT_NET_JOIN_RADIUS):
    centers = []
    covered = np.zeros(g.vertex_count, dtype=bool)

    for v in range(g.vertex_count):
        if covered[v]:
            continue
        centers.append(v)
        covered[v] = True
        covered[list(g.adjacency[v])] = True

    edges = []
    for i, c in enumerate(centers):
        row = g.distances_from(c)
        for j in range(i + 1, len(centers)):
            if row[centers[j]] <= join_radius:
                edges.append((i, j))

    labels = None
    if g.labels is not None:
        labels = [g.labels[c] for c in centers]

    net = MetricGraph(len(centers), edges, labels=labels)
    _, owner = g.nearest(centers)

    logger.debug("Net of %d centers from %d vertices", len(centers), g.vertex_count)
    return NetApproximation(net, tuple(centers), tuple(int(o) for o in owner))
