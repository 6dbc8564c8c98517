# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os
import tempfile
import time
from fractions import Fraction

import numpy as np
from ddt import data
from ddt import ddt
from ddt import unpack

from ctmap.error import DisconnectedGraph
from ctmap.error import EmptyEdgeList
from ctmap.error import GraphTooLarge
from ctmap.error import MalformedEdgeList
from ctmap.error import NonContiguousVertices
from ctmap.error import NotAGeodesic
from ctmap.error import NotAPath
from ctmap.error import SegmentGraphMismatch
from ctmap.error import SelfLoop
from ctmap.error import UnknownVertex
from ctmap.graph import ball
from ctmap.graph import build_graph
from ctmap.graph import delta_four_point
from ctmap.graph import four_point_defect
from ctmap.graph import GeodesicSegment
from ctmap.graph import gromov_product
from ctmap.graph import net_approximation
from ctmap.graph import parse_edge_list
from ctmap.graph import read_graph
from ctmap.graph.hyperbolicity import _scan_exhaustive
from ctmap.group import tiling_ball
from tests import unittest
from tests.helpers import cycle_graph
from tests.helpers import path_graph
from tests.helpers import random_tree
from tests.helpers import write_text
from tests.helpers import write_yaml


@ddt
class BuildGraphTest(unittest.TestCase):

    def test_ids_are_shifted_to_zero(self):
        g = build_graph([(1, 2), (2, 3)])
        self.assertEqual(g.vertex_count, 3)
        self.assertEqual(g.edges, ((0, 1), (1, 2)))

    @data(
        ([], EmptyEdgeList),
        ([(0, 2)], NonContiguousVertices),
        ([(0, 1), (2, 3)], DisconnectedGraph),
        ([(0, 0)], SelfLoop),
    )
    @unpack
    def test_rejects(self, edges, error):
        with self.assertRaises(error):
            build_graph(edges)

    def test_duplicate_edges_collapse(self):
        g = build_graph([(0, 1), (1, 0), (0, 1)])
        self.assertEqual(g.edge_count, 1)

    def test_labels_default_to_ids(self):
        g = path_graph(3)
        self.assertEqual(g.label(2), "2")
        self.assertEqual(g.label_index["1"], 1)

    def test_digest_ignores_edge_order(self):
        a = build_graph([(0, 1), (1, 2)])
        b = build_graph([(2, 1), (1, 0)])
        self.assertEqual(a.digest, b.digest)


@ddt
class DistanceTest(unittest.TestCase):

    @data((0, 0, 0), (0, 3, 3), (1, 5, 2), (5, 1, 2))
    @unpack
    def test_cycle_distances(self, u, v, expected):
        self.assertEqual(cycle_graph(6).distance(u, v), expected)

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertex):
            path_graph(3).distance(0, 7)

    def test_diameter(self):
        self.assertEqual(path_graph(5).diameter, 4)
        self.assertEqual(cycle_graph(7).diameter, 3)

    def test_gromov_product_is_a_half_integer(self):
        g = cycle_graph(5)
        # d(0,1) = 1, d(0,2) = 2, d(1,2) = 1
        self.assertEqual(gromov_product(g, 1, 2, 0), Fraction(1))
        self.assertEqual(gromov_product(g, 2, 3, 0), Fraction(3, 2))

    def test_ball(self):
        self.assertEqual(ball(cycle_graph(6), 0, 1), frozenset([0, 1, 5]))
        self.assertEqual(ball(path_graph(4), 0, 0), frozenset([0]))

    def test_nearest_breaks_ties_by_source_position(self):
        dist, owner = path_graph(5).nearest([4, 0])
        self.assertEqual(list(dist), [0, 1, 2, 1, 0])
        self.assertEqual(list(owner), [1, 1, 0, 0, 0])

    def test_interval(self):
        g = cycle_graph(4)
        self.assertTrue(g.interval(0, 2).all())
        self.assertEqual(list(g.interval(0, 1)), [True, True, False, False])


class GeodesicTest(unittest.TestCase):

    def test_canonical_geodesic_prefers_low_ids(self):
        g = cycle_graph(4)
        self.assertEqual(list(g.geodesic(0, 2).vertices), [0, 1, 2])
        self.assertEqual(list(g.geodesic(2, 0).vertices), [2, 1, 0])

    def test_geodesic_is_deterministic(self):
        g = cycle_graph(8)
        self.assertEqual(g.geodesic(1, 5), g.geodesic(1, 5))

    def test_segment_properties(self):
        seg = path_graph(5).geodesic(1, 4)
        self.assertEqual(seg.start, 1)
        self.assertEqual(seg.end, 4)
        self.assertEqual(seg.length, 3)
        self.assertEqual(list(seg.sub(1, 2)), [2, 3])

    def test_segment_checks_adjacency(self):
        with self.assertRaises(NotAPath):
            GeodesicSegment(cycle_graph(6), [0, 2])

    def test_segment_checks_length(self):
        with self.assertRaises(NotAGeodesic):
            GeodesicSegment(cycle_graph(6), [0, 1, 2, 3, 4])

    def test_segment_belongs_to_its_graph(self):
        seg = cycle_graph(6).geodesic(0, 3)
        seg.check_graph(cycle_graph(6))
        with self.assertRaises(SegmentGraphMismatch):
            seg.check_graph(path_graph(6))


@ddt
class HyperbolicityTest(unittest.TestCase):

    def test_four_cycle(self):
        report = delta_four_point(cycle_graph(4))
        self.assertEqual(report.delta, Fraction(1))
        self.assertEqual(report.witness, (0, 1, 2, 3))
        self.assertEqual(report.quadruples_scanned, 1)
        self.assertFalse(report.sampled)

    @data(4, 6, 9)
    def test_paths_are_trees(self, n):
        self.assertEqual(delta_four_point(path_graph(n)).delta, 0)

    def test_tree_witness_is_lexicographically_first(self):
        self.assertEqual(delta_four_point(path_graph(5)).witness, (0, 1, 2, 3))

    def test_small_graphs(self):
        report = delta_four_point(path_graph(3))
        self.assertEqual(report.delta, 0)
        self.assertEqual(len(report.witness), 4)

    def test_defect_matches_scan(self):
        g = cycle_graph(6)
        report = delta_four_point(g)
        self.assertEqual(four_point_defect(g, *report.witness), report.delta)

    def test_cap(self):
        with self.assertRaises(GraphTooLarge):
            delta_four_point(cycle_graph(10), cap=5)

    def test_trees_skip_the_cap(self):
        report = delta_four_point(path_graph(12), cap=5)
        self.assertEqual(report.delta, 0)
        self.assertEqual(report.quadruples_scanned, 495)

    def test_random_trees(self):
        rng = np.random.default_rng(7)
        trees = [random_tree(rng, int(rng.integers(4, 201))) for _ in range(50)]

        start = time.time()
        for g in trees:
            self.assertEqual(delta_four_point(g).delta, 0)
        self.assertLess(time.time() - start, 10)

    @data(5, 8, 12)
    def test_tree_result_agrees_with_the_scan(self, n):
        g = random_tree(np.random.default_rng(n), n)
        delta, witness, scanned = _scan_exhaustive(g)
        report = delta_four_point(g)
        self.assertEqual(report.delta, delta)
        self.assertEqual(report.witness, witness)
        self.assertEqual(report.quadruples_scanned, scanned)

    def test_sampling_is_seeded(self):
        g = cycle_graph(10)
        a = delta_four_point(g, sample=200, seed=3)
        b = delta_four_point(g, sample=200, seed=3)
        self.assertTrue(a.sampled)
        self.assertEqual(a, b)
        self.assertLessEqual(a.delta, delta_four_point(g).delta)


class NetApproximationTest(unittest.TestCase):

    def test_path_of_three(self):
        g = path_graph(3)
        net = net_approximation(g)
        self.assertEqual(net.centers, (0, 2))
        self.assertEqual(net.correspondence, (0, 0, 1))
        self.assertEqual(net.graph.edges, ((0, 1),))

        upper, lower = net.qi_defects(g)
        self.assertEqual(upper, 0)
        self.assertEqual(lower, Fraction(1, 4))

    def test_path_of_five_joins_the_outer_centers(self):
        g = path_graph(5)
        net = net_approximation(g)
        self.assertEqual(net.centers, (0, 2, 4))

        # d(0, 4) = 4 is within the join radius, so the outer pair is adjacent
        self.assertEqual(g.distance(0, 4), 4)
        self.assertEqual(net.graph.edges, ((0, 1), (0, 2), (1, 2)))

        # only a strictly smaller radius leaves the path 0 - 2 - 4
        self.assertEqual(net_approximation(g, join_radius=3).graph.edges,
                         ((0, 1), (1, 2)))

    def test_heptagonal_ball_is_quasi_isometric_to_its_net(self):
        g = tiling_ball(7, 3, 5)
        net = net_approximation(g)

        upper, lower = net.qi_defects(g, K=4)
        self.assertLessEqual(upper, 4)
        self.assertLessEqual(lower, 4)


class TilingEdgeListTest(unittest.TestCase):

    def test_heptagonal_edges_rebuild_the_same_graph(self):
        g = tiling_ball(7, 3, 3)
        rebuilt = build_graph(list(g.edges))

        self.assertEqual(rebuilt.vertex_count, 22)
        self.assertEqual(rebuilt.digest, g.digest)
        self.assertTrue((rebuilt.distance_matrix == g.distance_matrix).all())


class GraphFileTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def test_edge_list_with_comments(self):
        edges = parse_edge_list("# a path\n0 1\n\n1 2  # tail\n")
        self.assertEqual(edges, [(0, 1), (1, 2)])

    def test_malformed_line(self):
        with self.assertRaises(MalformedEdgeList):
            parse_edge_list("0 1\n1 2 3\n")

    def test_read_edge_list(self):
        path = write_text(os.path.join(self.tmp, "c4.txt"), "0 1\n1 2\n2 3\n3 0\n")
        g = read_graph(path)
        self.assertEqual(g.vertex_count, 4)
        self.assertEqual(g.edge_count, 4)

    def test_read_yaml_with_labels(self):
        path = write_yaml(os.path.join(self.tmp, "p3.yaml"), {
            'edges': [[0, 1], [1, 2]],
            'labels': ['x', 'y', 'z'],
        })
        g = read_graph(path)
        self.assertEqual(g.label(1), 'y')

    def test_edge_list_must_be_utf8(self):
        path = os.path.join(self.tmp, "latin1.txt")
        with io.open(path, 'wb') as fh:
            fh.write(b"0 1\n1 \xe9\n")
        with self.assertRaises(MalformedEdgeList) as cm:
            read_graph(path)
        self.assertIn("latin1.txt:2:", str(cm.exception))

    def test_yaml_edges_must_be_integers(self):
        path = write_yaml(os.path.join(self.tmp, "bad.yaml"), {
            'edges': [[0, 1], ['one', 2]],
        })
        with self.assertRaises(MalformedEdgeList) as cm:
            read_graph(path)
        self.assertIn("one 2", str(cm.exception))
