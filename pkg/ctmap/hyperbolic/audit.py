# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

from ctmap.const import DEFAULT_DIVERGENCE_MIN_SLOPE

AUDIT_LIPSCHITZ = "lipschitz"
AUDIT_CONCAT = "concat"
AUDIT_CONCAT_K = "concat_k"
AUDIT_CONCAT_EPSILON = "concat_epsilon"
AUDIT_INNER_PRODUCT = "inner_product"
AUDIT_COMPAT = "compat"
AUDIT_DIVERGENCE = "divergence"
AUDIT_QI_EMBEDDED = "qi_embedded"
AUDIT_RETRACTION = "retraction"
AUDIT_CRITERION = "criterion"
AUDIT_LOWER_BOUND = "lower_bound"
AUDIT_MODE_AGREEMENT = "mode_agreement"

# audits whose budget --budget and the settings file may override
AUDITS = [
    AUDIT_LIPSCHITZ,
    AUDIT_CONCAT_K,
    AUDIT_CONCAT_EPSILON,
    AUDIT_INNER_PRODUCT,
    AUDIT_DIVERGENCE,
    AUDIT_MODE_AGREEMENT,
]


class AuditResult(namedtuple(
        '_AuditResult', [
            'audit',
            'input_digest',
            'measured',
            'budget',
            'passed',
            'witness',
        ])):
    """
    One audit verdict.  ``measured`` and ``budget`` are exact numbers (or
    small value objects with a stable ``str``); ``witness`` names the input
    that produced ``measured``.
    """

    def __new__(cls, audit, input_digest, measured, budget, passed,
                witness=None):
        return super(AuditResult, cls).__new__(
            cls, audit, input_digest, measured, budget, bool(passed), witness
        )

    def row(self):
        return [
            self.audit,
            self.input_digest,
            str(self.measured),
            str(self.budget),
            "pass" if self.passed else "fail",
        ]


def lipschitz_budget(delta):
    return 4 * Fraction(delta) + 1


def concat_budget(delta):
    """``(K, epsilon)`` bounds for a projection-then-geodesic concatenation."""
    return Fraction(3), 8 * Fraction(delta) + 2


def inner_product_budget(K, epsilon, delta):
    delta = Fraction(delta)
    return Fraction(K) * (Fraction(epsilon) / 2 + 2 * delta) + 2 * delta


def compat_budget(K, epsilon, delta, identity=False):
    if identity:
        return Fraction(1)
    K, epsilon, delta = Fraction(K), Fraction(epsilon), Fraction(delta)
    return K * (epsilon + 4 * delta + 2) + epsilon + 2 * delta


def divergence_budget():
    return DEFAULT_DIVERGENCE_MIN_SLOPE
