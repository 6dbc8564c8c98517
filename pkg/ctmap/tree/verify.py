# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple

import numpy as np

from ctmap.error import FamilyConstantsViolated
from ctmap.graph import delta_four_point
from ctmap.hyperbolic.audit import AUDIT_QI_EMBEDDED
from ctmap.hyperbolic.audit import AuditResult
from ctmap.hyperbolic.quasigeodesic import estimate_qi
from ctmap.hyperbolic.quasigeodesic import QIEstimate
from ctmap.logger import logger
from ctmap.util.threading import run_all

EdgeEstimate = namedtuple('EdgeEstimate', ['edge', 'side', 'estimate', 'passed'])


def attach_estimate(tos, e, side):
    """Grid-minimal (K, eps) of the attach map of ``e`` into ``side``."""
    table = np.asarray(e.attach(side))
    d = e.space.distance_matrix
    d_image = tos.space(side).distance_matrix[np.ix_(table, table)]
    return estimate_qi(d, d_image, eps_cap=tos.params.epsilon)


def verify_qi_embedded(tos, total=None):
    """
    Measure every attach map against the declared family constants.  Edges
    are measured in parallel; the result keeps the edge order.
    """
    declared = QIEstimate(tos.params.K, tos.params.epsilon)

    def measure(e):
        out = []
        for side in e.ends:
            estimate = attach_estimate(tos, e, side)
            out.append(EdgeEstimate(e, side, estimate, estimate.within(declared)))
        return out

    results = [r for pair in run_all(measure, tos.edges) for r in pair]
    for r in results:
        if not r.passed:
            logger.warning("Attach map of %s into %d exceeds (%s): %s",
                           r.edge, r.side, declared, r.estimate)
    return results


def qi_audits(tos, results):
    declared = QIEstimate(tos.params.K, tos.params.epsilon)
    return [
        AuditResult(
            "%s:%s>%d" % (AUDIT_QI_EMBEDDED, r.edge, r.side),
            r.edge.space.digest[:16],
            r.estimate,
            declared,
            r.passed,
        )
        for r in results
    ]


def verify_hyperbolicity(tos, cap=None):
    """
    Four-point delta of every vertex space against the declared delta.
    Spaces shared between vertices are scanned once.
    """
    kwargs = {} if cap is None else {'cap': cap}
    reports = {}
    out = []
    for v, space in enumerate(tos.spaces):
        report = reports.get(space.digest)
        if report is None:
            report = reports[space.digest] = delta_four_point(space, **kwargs)
        out.append(AuditResult(
            "delta:v%d" % v,
            space.digest[:16],
            report.delta,
            tos.params.delta,
            report.delta <= tos.params.delta,
            witness=report.witness,
        ))
    return out


def verify_uniform_properness(tos, total, M_values):
    """
    ``N(M)``: the largest ``d_v(x, y)`` over vertex spaces and pairs with
    ``d_X(i_v x, i_v y) <= M``.
    """
    M_values = sorted(set(int(M) for M in M_values))
    worst = {M: 0 for M in M_values}

    for v, space in enumerate(tos.spaces):
        lifted = np.asarray(total.fiber_vertices(v))
        for x in range(space.vertex_count):
            d_total = total.graph.distances_from(int(lifted[x]))[lifted]
            d_local = space.distances_from(x)
            for M in M_values:
                close = d_local[d_total <= M]
                worst[M] = max(worst[M], int(close.max()))

    return [(M, worst[M]) for M in M_values]


def check_family(tos, total=None, cap=None):
    """
    Raise :class:`FamilyConstantsViolated` unless every vertex space is
    within the declared delta and every attach map within the declared
    ``(K, epsilon)``.
    """
    failed = [r.audit for r in verify_hyperbolicity(tos, cap=cap) if not r.passed]
    failed += [
        r.audit for r in qi_audits(tos, verify_qi_embedded(tos, total)) if not r.passed
    ]
    if failed:
        raise FamilyConstantsViolated(failed)
    logger.debug("%s is within its declared family constants", tos.name)
