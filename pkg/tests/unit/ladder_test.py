# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import numpy as np

from ctmap.error import ConstantsNegative
from ctmap.error import LadderTrivial
from ctmap.ladder import audit_quasiconvexity
from ctmap.ladder import audit_retraction_lipschitz
from ctmap.ladder import audit_vertical_bound
from ctmap.ladder import build_b1
from ctmap.ladder import build_ladder
from ctmap.ladder import ladder_constants
from ctmap.ladder import retract
from ctmap.ladder import Retraction
from ctmap.ladder import retraction_report
from ctmap.ladder.retraction import CASE_OUTSIDE
from ctmap.ladder.retraction import CASE_OVER_SUPPORT
from ctmap.ladder.retraction import CASE_SAME_FIBER
from ctmap.group import parse_automorphism
from ctmap.tree import assemble_total_space
from ctmap.tree import product_tree
from ctmap.tree import twisted_tree
from tests import unittest


class LadderTestCase(unittest.TestCase):
    """
    The product of the rank-one ball of radius 3 (the path
    AAA - AA - A - 1 - a - aa - aaa, ids 6 4 2 0 1 3 5) with a tree path
    of three vertices.
    """

    def setUp(self):
        self.tos = product_tree("free:1", length=3, radius=3)
        self.total = assemble_total_space(self.tos)
        self.space = self.tos.space(0)
        self.base = self.space.geodesic(0, 5)


class BuildLadderTest(LadderTestCase):

    def test_b1_carries_the_widest_pair(self):
        steps = build_b1(self.tos, self.total, 0, self.base, 0, 0)
        self.assertEqual(len(steps), 1)
        step = steps[0]
        self.assertEqual((step.vertex, step.parent, step.p, step.q), (1, 0, 0, 5))
        self.assertEqual(list(step.segment), [0, 1, 3, 5])

    def test_b1_drops_narrow_pairs(self):
        self.assertEqual(build_b1(self.tos, self.total, 0, self.base, 0, 3), [])

    def test_full_propagation(self):
        ladder = build_ladder(self.tos, self.total, self.base, 0, 0)
        self.assertEqual(ladder.support, frozenset([0, 1, 2]))
        self.assertEqual([ladder.generation(v) for v in (0, 1, 2)], [0, 1, 2])
        self.assertEqual(ladder.provenance[2].parent, 1)
        self.assertEqual(ladder.vertices,
                         [0, 1, 3, 5, 7, 8, 10, 12, 14, 15, 17, 19])
        self.assertFalse(ladder.trivial)

    def test_trivial_ladder(self):
        ladder = build_ladder(self.tos, self.total, self.base, 0, 3)
        self.assertTrue(ladder.trivial)
        self.assertEqual(ladder.vertices, [0, 1, 3, 5])

    def test_negative_constants(self):
        with self.assertRaises(ConstantsNegative):
            build_ladder(self.tos, self.total, self.base, -1, 0)

    def test_digest_is_stable(self):
        a = build_ladder(self.tos, self.total, self.base, 0, 0)
        b = build_ladder(self.tos, self.total, self.base, 0, 0)
        self.assertEqual(a.digest, b.digest)
        self.assertEqual(len(a.digest), 16)

    def test_dump(self):
        dump = build_ladder(self.tos, self.total, self.base, 0, 0).dump()
        self.assertEqual(dump['base'], [0, 1, 3, 5])
        self.assertEqual(dump['vertices'][0], {
            'vertex': 0, 'generation': 0, 'segment': [0, 1, 3, 5]})
        self.assertEqual(dump['vertices'][1]['pair'], [0, 5])

    def test_calibrated_constants_on_a_tree(self):
        constants = ladder_constants(self.tos)
        self.assertEqual(tuple(constants), (0, 1, 0, 0))


class RetractionTest(LadderTestCase):

    def setUp(self):
        super(RetractionTest, self).setUp()
        self.ladder = build_ladder(self.tos, self.total, self.base, 0, 0)

    def test_fixes_the_ladder(self):
        retraction = Retraction(self.ladder)
        for x in self.ladder.vertices:
            self.assertEqual(retraction(x), x)

    def test_fiber_projection(self):
        # A (id 2) in the root fibre projects to the identity
        self.assertEqual(retract(self.tos, self.total, self.ladder, 2), 0)

    def test_mid_copies_fall_to_the_lower_end(self):
        mid = self.total.lift_mid(0, 3)
        self.assertEqual(retract(self.tos, self.total, self.ladder, mid),
                         self.total.lift(0, 3))

    def test_lipschitz(self):
        C0, witness, cases = audit_retraction_lipschitz(
            self.tos, self.total, self.ladder)
        self.assertEqual(C0, 2)
        self.assertIsNotNone(witness)
        self.assertEqual(cases[CASE_SAME_FIBER].value, 1)
        self.assertEqual(cases[CASE_OVER_SUPPORT].value, 2)
        self.assertNotIn(CASE_OUTSIDE, cases)

    def test_quasiconvexity(self):
        self.assertEqual(audit_quasiconvexity(self.tos, self.total, self.ladder), 1)

    def test_vertical_bound(self):
        bound = audit_vertical_bound(self.tos, self.total, self.ladder)
        self.assertEqual(bound.A, 2)
        self.assertEqual(bound.witness, 7)

    def test_vertical_bound_needs_a_ladder(self):
        ladder = build_ladder(self.tos, self.total, self.base, 0, 3)
        with self.assertRaises(LadderTrivial):
            audit_vertical_bound(self.tos, self.total, ladder)

    def test_report(self):
        report = retraction_report(self.tos, self.total, self.ladder)
        self.assertEqual(report.lipschitz_C0, 2)
        self.assertEqual(report.quasiconvexity_Cprime, 1)
        self.assertEqual(report.vertical_A, 2)
        self.assertTrue(report.fixes_ladder)

        rows = report.rows()
        self.assertEqual(rows[0][:2], ["C0", "2"])
        self.assertEqual(rows[-1], ["fixes_ladder", "yes", ""])

    def test_report_on_a_trivial_ladder(self):
        ladder = build_ladder(self.tos, self.total, self.base, 0, 3)
        report = retraction_report(self.tos, self.total, ladder)
        self.assertEqual(report.vertical_A, 0)
        self.assertTrue(report.fixes_ladder)


class LadderFamilyTest(unittest.TestCase):

    def measure(self, tos, family):
        total = assemble_total_space(tos)
        constants = ladder_constants(tos)
        out = []
        for lam in family:
            ladder = build_ladder(tos, total, lam, constants.C, constants.D)
            report = retraction_report(tos, total, ladder)
            self.assertTrue(report.fixes_ladder, lam)
            out.append((report.lipschitz_C0, report.vertical_A))
        return out

    def assertUniform(self, measured):
        C0 = [c for c, _ in measured]
        A = [a for _, a in measured]
        self.assertGreater(min(C0), 0)
        self.assertLessEqual(max(C0), 2 * min(C0))
        self.assertLessEqual(max(A) - min(A), 1)

    def test_product(self):
        tos = product_tree("free:1", length=3, radius=10)
        space = tos.space(0)
        end = space.label_index["A" * 10]
        row = space.distances_from(end)
        family = [
            space.geodesic(end, int(np.flatnonzero(row == L)[0])) for L in range(6, 21)
        ]

        measured = self.measure(tos, family)
        self.assertEqual(set(measured), {(2, 2)})

    def test_twisted(self):
        tos = twisted_tree(2, parse_automorphism("a->ab,b->a"))
        space = tos.space(0)
        # through the identity, so every ladder leaves the root fibre
        family = [
            space.geodesic(space.label_index["A" * (L // 2)],
                           space.label_index["b" * (L - L // 2)])
            for L in range(2, 9)
        ]
        self.assertEqual([lam.length for lam in family], list(range(2, 9)))

        self.assertUniform(self.measure(tos, family))
