# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from fractions import Fraction

from ctmap.error import AttachMapIncomplete
from ctmap.error import AttachMapNotInjective
from ctmap.error import AttachTargetMissing
from ctmap.error import EndpointOutsideDomain
from ctmap.error import FamilyConstantsViolated
from ctmap.error import NotATree
from ctmap.error import VertexIsRoot
from ctmap.group import parse_automorphism
from ctmap.tree import assemble_total_space
from ctmap.tree import capital_phi
from ctmap.tree import check_family
from ctmap.tree import FamilyParams
from ctmap.tree import phi_map
from ctmap.tree import product_tree
from ctmap.tree import qi_audits
from ctmap.tree import TreeEdge
from ctmap.tree import TreeOfSpaces
from ctmap.tree import tree_projection_gap
from ctmap.tree import twisted_tree
from ctmap.tree import verify_hyperbolicity
from ctmap.tree import verify_qi_embedded
from ctmap.tree import verify_uniform_properness
from tests import unittest
from tests.helpers import cycle_graph
from tests.helpers import path_graph


class TreeOfSpacesTest(unittest.TestCase):

    def setUp(self):
        self.tos = product_tree("free:1", length=3, radius=2)

    def test_structure(self):
        tos = self.tos
        self.assertEqual(tos.vertex_count, 3)
        self.assertEqual(len(tos.edges), 2)
        self.assertEqual(tos.children(0), [1])
        self.assertEqual(tos.parent(2), 1)
        self.assertEqual(tos.depth(2), 2)
        self.assertEqual(tos.tree_distance(0, 2), 2)
        self.assertEqual(tos.params, FamilyParams(0, 1, 0))

    def test_incoming_edges(self):
        self.assertEqual(self.tos.incoming_edge(2).ends, (1, 2))
        with self.assertRaises(VertexIsRoot):
            self.tos.incoming_edge(0)

    def test_root_may_be_any_vertex(self):
        edges = list(self.tos.edges)
        tos = TreeOfSpaces(self.tos.spaces, edges, root=1)
        self.assertEqual(tos.children(1), [0, 2])
        self.assertEqual(tos.incoming_edge(0).ends, (0, 1))

    def test_not_a_tree(self):
        space = path_graph(3)
        with self.assertRaises(NotATree):
            TreeOfSpaces([space, space], [])

    def test_attach_must_be_injective(self):
        space = path_graph(3)
        edge = TreeEdge(0, 1, space, [0, 0, 1], [0, 1, 2])
        with self.assertRaises(AttachMapNotInjective):
            TreeOfSpaces([space, space], [edge])

    def test_attach_must_be_complete(self):
        space = path_graph(3)
        edge = TreeEdge(0, 1, space, [0, 1], [0, 1, 2])
        with self.assertRaises(AttachMapIncomplete):
            TreeOfSpaces([space, space], [edge])

    def test_attach_must_land_in_the_space(self):
        space = path_graph(3)
        edge = TreeEdge(0, 1, space, [0, 1, 2], [1, 2, 3])
        with self.assertRaises(AttachTargetMissing):
            TreeOfSpaces([space, space], [edge])


class MapsTest(unittest.TestCase):

    def test_identity_gluing(self):
        tos = product_tree("free:1", length=2, radius=2)
        self.assertEqual(phi_map(tos, 1), {x: x for x in range(5)})

        mu = tos.space(0).geodesic(3, 4)
        self.assertEqual(capital_phi(tos, 1, mu), tos.space(1).geodesic(3, 4))

    def test_partial_gluing(self):
        big = path_graph(5)
        small = path_graph(2)
        edge = TreeEdge(0, 1, small, [1, 2], [3, 4])
        tos = TreeOfSpaces([big, big], [edge])

        self.assertEqual(phi_map(tos, 1), {1: 3, 2: 4})
        self.assertEqual(list(capital_phi(tos, 1, big.geodesic(1, 2))), [3, 4])
        with self.assertRaises(EndpointOutsideDomain):
            capital_phi(tos, 1, big.geodesic(0, 2))


class TotalSpaceTest(unittest.TestCase):

    def setUp(self):
        self.tos = product_tree("free:1", length=3, radius=2)
        self.total = assemble_total_space(self.tos)

    def test_counts(self):
        graph = self.total.graph
        # 3 vertex copies and 2 mid copies of a 5-vertex path
        self.assertEqual(graph.vertex_count, 25)
        self.assertEqual(graph.edge_count, 12 + 8 + 20)

    def test_lifts_and_fibers(self):
        total = self.total
        x = total.lift(1, 3)
        self.assertEqual(x, 8)
        fiber, local = total.local(x)
        self.assertTrue(fiber.over_vertex)
        self.assertEqual((fiber.index, local), (1, 3))

        mid = total.lift_mid(0, 2)
        self.assertEqual(mid, 17)
        self.assertFalse(total.projection(mid).over_vertex)
        self.assertEqual(str(total.projection(mid)), "e0")

    def test_rungs(self):
        total = self.total
        self.assertEqual(total.graph.distance(total.lift(0, 2), total.lift(1, 2)), 2)
        self.assertEqual(total.graph.distance(total.lift(0, 2), total.lift(2, 2)), 4)

    def test_tree_distance_with_midpoints(self):
        total = self.total
        self.assertEqual(total.tree_distance(total.lift(0, 0), total.lift(2, 4)), 2)
        self.assertEqual(
            total.tree_distance(total.lift(0, 0), total.lift_mid(1, 0)), Fraction(3, 2))
        self.assertEqual(total.tree_distance(total.lift(1, 0), total.lift(1, 4)), 0)

    def test_projection_does_not_increase_distance(self):
        gap, witness = tree_projection_gap(self.total)
        self.assertEqual(gap, 0)
        self.assertEqual(witness, (0, 0))

    def test_total_space_is_deterministic(self):
        again = assemble_total_space(product_tree("free:1", length=3, radius=2))
        self.assertEqual(again.graph.digest, self.total.graph.digest)


class VerifyTest(unittest.TestCase):

    def test_product_family(self):
        tos = product_tree("free:1", length=3, radius=2)
        total = assemble_total_space(tos)

        results = verify_qi_embedded(tos, total)
        self.assertEqual(len(results), 4)
        self.assertTrue(all(r.passed for r in results))
        self.assertEqual([(str(r.edge), r.side) for r in results],
                         [("0-1", 0), ("0-1", 1), ("1-2", 1), ("1-2", 2)])

        audits = qi_audits(tos, results)
        self.assertEqual(audits[0].audit, "qi_embedded:0-1>0")

        hyper = verify_hyperbolicity(tos)
        self.assertEqual([a.audit for a in hyper], ["delta:v0", "delta:v1", "delta:v2"])
        self.assertTrue(all(a.passed for a in hyper))

        self.assertEqual(verify_uniform_properness(tos, total, [0, 1, 2]),
                         [(0, 0), (1, 1), (2, 2)])

    def test_declared_constants_too_small(self):
        tos = twisted_tree(2, parse_automorphism("a->ab,b->a"),
                           vertex_radius=4, edge_radius=2,
                           params=FamilyParams(0, 1, 0))
        results = verify_qi_embedded(tos)
        self.assertTrue(results[0].passed)
        self.assertFalse(results[1].passed)

    def test_twisted_family(self):
        tos = twisted_tree(2, parse_automorphism("a->ab,b->a"))
        self.assertEqual(tos.space(0).vertex_count, 161)
        self.assertEqual(tos.edges[0].space.vertex_count, 17)
        self.assertTrue(all(r.passed for r in verify_qi_embedded(tos)))

    def test_check_family_accepts_declared_constants(self):
        tos = twisted_tree(2, parse_automorphism("a->ab,b->a"))
        check_family(tos)

    def test_check_family_rejects_stretched_attach_map(self):
        tos = twisted_tree(2, parse_automorphism("a->ab,b->a"),
                           vertex_radius=4, edge_radius=2,
                           params=FamilyParams(0, 1, 0))
        with self.assertRaises(FamilyConstantsViolated) as cm:
            check_family(tos)
        self.assertEqual(cm.exception.audits, ["qi_embedded:0-1>1"])

    def test_check_family_rejects_thick_spaces(self):
        c4 = cycle_graph(4)
        tos = TreeOfSpaces([c4, c4], [TreeEdge(0, 1, c4, range(4), range(4))])
        with self.assertRaises(FamilyConstantsViolated) as cm:
            check_family(tos)
        self.assertEqual(cm.exception.audits, ["delta:v0", "delta:v1"])
