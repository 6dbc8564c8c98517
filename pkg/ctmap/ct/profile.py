# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

from ctmap.const import DEFAULT_EXHAUSTIVE_CAP
from ctmap.const import MODE_CANONICAL
from ctmap.const import MODE_EXHAUSTIVE
from ctmap.error import EmptyFamily
from ctmap.error import GraphTooLarge
from ctmap.error import InconsistentBasepoint
from ctmap.error import InvalidSpecification
from ctmap.error import NBeyondSpace
from ctmap.hyperbolic.audit import AUDIT_CRITERION
from ctmap.hyperbolic.audit import AUDIT_LOWER_BOUND
from ctmap.hyperbolic.audit import AUDIT_MODE_AGREEMENT
from ctmap.hyperbolic.audit import AuditResult
from ctmap.logger import logger

ProfileRow = namedtuple('ProfileRow', ['N', 'f', 'M', 'digest'])


class ProperTable(namedtuple('_ProperTable', ['basepoint', 'rows', 'omitted'])):
    """``f(N)`` per ``N``; ``omitted`` lists the values beyond the space."""

    def f(self, N):
        for n, value in self.rows:
            if n == N:
                return value
        raise KeyError(N)

    def as_dict(self):
        return dict(self.rows)


class CTProfile(namedtuple('_CTProfile', ['basepoint', 'rows', 'mode'])):

    def csv_rows(self):
        return [[r.N, r.f, r.M, self.mode, r.digest] for r in self.rows]


class CriterionReport(namedtuple(
        '_CriterionReport', ['rows', 'rowwise', 'trend', 'witness'])):
    """
    Row-wise comparison of ``M(N)`` against ``f(N) / (A + 1) - C'`` plus the
    growth trend of ``M``.  ``rows`` holds ``(N, M, bound, ok)``.
    """

    @property
    def passed(self):
        return self.rowwise and self.trend

    def verdict(self):
        witness = "" if self.witness is None else "N=%d" % self.witness
        if self.witness is None and not self.trend:
            witness = "trend"
        return [AUDIT_CRITERION, "pass" if self.passed else "fail", witness]


def _root_rows(tos, total, x0, v0):
    space = tos.space(v0)
    lifted = list(total.fiber_vertices(v0))
    d_local = space.distances_from(x0)
    d_total = total.graph.distances_from(total.lift(v0, x0))[lifted]
    return d_local, d_total


def properness_modulus(tos, total, x0, N_values, v0=None):
    """
    ``f(N)``: the least total-space distance from ``i(x0)`` to a vertex of
    the ``v0`` fibre lying at least ``N`` from ``x0`` in its own metric.
    """
    v0 = tos.root if v0 is None else v0
    d_local, d_total = _root_rows(tos, total, x0, v0)
    radius = int(d_local.max())

    rows = []
    omitted = []
    for N in sorted(set(int(n) for n in N_values)):
        if N > radius:
            logger.info("%s", NBeyondSpace(N, radius))
            omitted.append(N)
            continue
        rows.append((N, int(d_total[d_local >= N].min())))

    return ProperTable(total.lift(v0, x0), tuple(rows), tuple(omitted))


def tangent_family(tos, x0, N_values, min_length=2, v0=None):
    """
    For every ``N`` the canonical geodesic of the lexicographically least
    pair ``a < b`` with ``d(a, b) >= min_length`` whose distance from ``x0``
    is exactly ``N``.  Values with no such pair are skipped.
    """
    v0 = tos.root if v0 is None else v0
    space = tos.space(v0)
    row = space.distances_from(x0)
    wanted = set(int(n) for n in N_values)

    found = {}
    n = space.vertex_count
    for a in range(n):
        if not wanted - set(found):
            break
        d_a = space.distances_from(a)
        for b in range(a + 1, n):
            if d_a[b] < min_length:
                continue
            seg = space.geodesic(a, b)
            N = int(row[list(seg.vertices)].min())
            if N in wanted and N not in found:
                found[N] = seg

    skipped = sorted(wanted - set(found))
    if skipped:
        logger.debug("No tangent geodesic for N in %s", skipped)
    return [found[N] for N in sorted(found)]


def _far_side(total, x0_lifted, start, end, mode):
    graph = total.graph
    from_x0 = graph.distances_from(x0_lifted)
    if mode == MODE_CANONICAL:
        return int(from_x0[list(graph.geodesic(start, end).vertices)].min())
    return int(from_x0[graph.interval(start, end)].min())


def mn_profile(tos, total, x0, family, mode=MODE_CANONICAL,
               cap=DEFAULT_EXHAUSTIVE_CAP, v0=None):
    """
    For each ``lambda`` in ``family``: ``N`` is its distance from ``x0`` in
    the ``v0`` fibre and ``M`` the distance from ``i(x0)`` to the total-space
    geodesic joining its lifted ends.  Rows sharing ``N`` keep the least
    ``M``.
    """
    if not family:
        raise EmptyFamily()
    if mode not in (MODE_CANONICAL, MODE_EXHAUSTIVE):
        raise InvalidSpecification("Unknown mode: %s" % mode)
    if mode == MODE_EXHAUSTIVE and total.graph.vertex_count > cap:
        raise GraphTooLarge(total.graph.vertex_count, cap, "use canonical mode")

    v0 = tos.root if v0 is None else v0
    space = tos.space(v0)
    d_local, d_total = _root_rows(tos, total, x0, v0)
    basepoint = total.lift(v0, x0)

    worst = {}
    for lam in family:
        lam.check_graph(space)
        N = int(d_local[list(lam.vertices)].min())
        M = _far_side(total, basepoint, total.lift(v0, lam.start),
                      total.lift(v0, lam.end), mode)
        if N not in worst or M < worst[N][0]:
            worst[N] = (M, lam.digest)

    rows = []
    for N in sorted(worst):
        f = int(d_total[d_local >= N].min())
        M, digest = worst[N]
        rows.append(ProfileRow(N, f, M, digest))

    return CTProfile(basepoint, tuple(rows), mode)


def criterion_check(profile, f_table, A, Cprime):
    """
    Passes when every row has ``M >= f / (A + 1) - C'`` and the least ``M``
    of the last third of rows beats the least ``M`` of the first third.  A
    single row has no trend and passes on the row-wise test alone.
    """
    if f_table is not None and f_table.basepoint != profile.basepoint:
        raise InconsistentBasepoint(f_table.basepoint, profile.basepoint)

    A = Fraction(A)
    Cprime = Fraction(Cprime)
    known = f_table.as_dict() if f_table is not None else {}

    rows = []
    witness = None
    for r in profile.rows:
        f = known.get(r.N, r.f)
        bound = Fraction(f) / (A + 1) - Cprime
        ok = r.M >= bound
        if not ok and witness is None:
            witness = r.N
        rows.append((r.N, r.M, bound, ok))

    Ms = [r.M for r in profile.rows]
    third = max(1, len(Ms) // 3)
    trend = len(Ms) == 1 or (len(Ms) > 1 and min(Ms[-third:]) > min(Ms[:third]))

    return CriterionReport(tuple(rows), witness is None, trend, witness)


def mode_agreement(canonical, exhaustive, slack):
    """
    Largest ``M_canonical - M_exhaustive`` over the shared ``N`` against
    ``slack``.  The exhaustive ``M`` minimises over every geodesic, so the
    gap is never negative.
    """
    exhaustive_M = dict((r.N, r.M) for r in exhaustive.rows)
    gap = 0
    witness = None
    for r in canonical.rows:
        if r.N in exhaustive_M and r.M - exhaustive_M[r.N] > gap:
            gap = r.M - exhaustive_M[r.N]
            witness = r

    return AuditResult(
        AUDIT_MODE_AGREEMENT,
        witness.digest if witness is not None else "",
        gap,
        slack,
        gap <= slack,
        witness=None if witness is None else witness.N,
    )


def ladder_lower_bound_check(total, ladder, x0, f_of_N, A):
    """
    Every ladder vertex ``p`` must satisfy
    ``d(x0, p) >= max(f - A d_T, d_T) >= f / (A + 1)`` where ``d_T`` is the
    tree distance between the fibres of ``x0`` and ``p``.
    """
    A = Fraction(A)
    f = Fraction(f_of_N)
    from_x0 = total.graph.distances_from(x0)

    slack = None
    witness = None
    for p in ladder.vertices:
        d_T = total.tree_distance(x0, p)
        lower = max(f - A * d_T, d_T)
        gap = min(int(from_x0[p]) - lower, lower - f / (A + 1))
        if slack is None or gap < slack:
            slack = gap
            witness = p

    return AuditResult(
        AUDIT_LOWER_BOUND,
        ladder.digest,
        slack,
        0,
        slack >= 0,
        witness=witness,
    )
