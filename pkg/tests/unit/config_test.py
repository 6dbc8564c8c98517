# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import os
import shutil
import tempfile
from fractions import Fraction

import yaml
from ddt import data
from ddt import ddt

from ctmap.config import load_graph
from ctmap.config import load_tree_spec
from ctmap.config import serialize_config
from ctmap.config import tree_from_mapping
from ctmap.config import validate_specification
from ctmap.context import CTMapContext
from ctmap.error import AttachTargetMissing
from ctmap.error import InputError
from ctmap.error import InvalidSpecification
from ctmap.settings import parse_number
from ctmap.settings import Settings
from tests import unittest
from tests.helpers import product_spec
from tests.helpers import write_text
from tests.helpers import write_yaml


class ValidationTest(unittest.TestCase):

    def test_product_spec_is_valid(self):
        spec = product_spec()
        self.assertIs(validate_specification(spec), spec)

    def test_missing_vertices(self):
        spec = product_spec()
        del spec['vertices']
        with self.assertRaises(InvalidSpecification) as cm:
            validate_specification(spec, filename="tree.yaml")
        self.assertIn("vertices is required", str(cm.exception))
        self.assertIn("'tree.yaml'", str(cm.exception))

    def test_unknown_top_level_key(self):
        spec = product_spec()
        spec['colour'] = 'blue'
        with self.assertRaises(InvalidSpecification) as cm:
            validate_specification(spec)
        self.assertIn('Invalid top-level property "colour"', str(cm.exception))

    def test_space_needs_one_source(self):
        spec = product_spec()
        spec['spaces']['ball'] = {'radius': 2}
        with self.assertRaises(InvalidSpecification):
            validate_specification(spec)

    def test_unsupported_version(self):
        spec = product_spec()
        spec['specification'] = '2.0'
        with self.assertRaises(InvalidSpecification) as cm:
            validate_specification(spec)
        self.assertIn("unsupported", str(cm.exception))

    def test_top_level_must_be_a_mapping(self):
        with self.assertRaises(InvalidSpecification):
            validate_specification(['not', 'a', 'mapping'])


@ddt
class LoaderTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_product(self):
        tos = tree_from_mapping(product_spec(length=3, radius=2))
        self.assertEqual(tos.vertex_count, 3)
        self.assertEqual(tos.name, "product")
        self.assertEqual(tos.space(0).vertex_count, 5)
        self.assertEqual(tos.edges[0].attach_lo, (0, 1, 2, 3, 4))

    def test_spaces_are_shared(self):
        tos = tree_from_mapping(product_spec(length=3, radius=2))
        self.assertIs(tos.space(0), tos.space(2))

    def test_fractional_constants(self):
        spec = product_spec()
        spec['family'] = {'delta': '1/2', 'K': 2, 'epsilon': 0.25}
        tos = tree_from_mapping(spec)
        self.assertEqual(tos.params.delta, Fraction(1, 2))
        self.assertEqual(tos.params.epsilon, Fraction(1, 4))

    def test_explicit_tables(self):
        spec = {
            'specification': '1.0',
            'spaces': {
                'long': {'edges': [[0, 1], [1, 2], [2, 3]]},
                'short': {'edges': [[0, 1]]},
            },
            'vertices': ['long', 'long'],
            'edges': [{'ends': [0, 1], 'space': 'short', 'lo': [1, 2], 'hi': [2, 3]}],
        }
        tos = tree_from_mapping(spec)
        self.assertEqual(tos.edges[0].attach_hi, (2, 3))

    def test_automorphism_rule(self):
        spec = {
            'specification': '1.0',
            'spaces': {
                'big': {'model': 'free:2', 'radius': 2},
                'small': {'model': 'free:2', 'radius': 1},
            },
            'vertices': ['big', 'big'],
            'edges': [{
                'ends': [0, 1], 'space': 'small',
                'lo': 'identity', 'hi': 'automorphism:a->ab,b->a',
            }],
        }
        tos = tree_from_mapping(spec)
        big = tos.space(1)
        small = tos.edges[0].space
        a = small.label_index['a']
        self.assertEqual(big.label(tos.edges[0].attach_hi[a]), 'ab')

    def test_automorphism_image_outside_ball(self):
        spec = {
            'specification': '1.0',
            'spaces': {'ball': {'model': 'free:2', 'radius': 1}},
            'vertices': ['ball', 'ball'],
            'edges': [{'ends': [0, 1], 'space': 'ball', 'hi': 'automorphism:a->ab,b->a'}],
        }
        with self.assertRaises(AttachTargetMissing):
            tree_from_mapping(spec)

    @data('mirror', 'automorphism:a=b')
    def test_unknown_rules(self, rule):
        spec = product_spec(length=2)
        spec['edges'][0]['hi'] = rule
        with self.assertRaises(InputError):
            tree_from_mapping(spec)

    def test_unknown_space(self):
        spec = product_spec(length=2)
        spec['vertices'] = ['ball', 'nowhere']
        with self.assertRaises(InvalidSpecification):
            tree_from_mapping(spec)

    def test_edge_outside_tree(self):
        spec = product_spec(length=2)
        spec['edges'][0]['ends'] = [0, 5]
        with self.assertRaises(InvalidSpecification):
            tree_from_mapping(spec)

    def test_file_spaces_are_relative_to_the_spec(self):
        write_text(os.path.join(self.tmp, "p3.txt"), "0 1\n1 2\n")
        path = write_yaml(os.path.join(self.tmp, "tree.yaml"), {
            'specification': '1.0',
            'spaces': {'p3': {'file': 'p3.txt'}},
            'vertices': ['p3'],
        })
        tos = load_tree_spec(path)
        self.assertEqual(tos.space(0).vertex_count, 3)
        self.assertEqual(tos.name, "tree.yaml")

    def test_missing_file(self):
        with self.assertRaises(InvalidSpecification):
            load_tree_spec(os.path.join(self.tmp, "absent.yaml"))

    def test_broken_yaml(self):
        path = write_text(os.path.join(self.tmp, "broken.yaml"), "spaces: [\n")
        with self.assertRaises(InvalidSpecification):
            load_tree_spec(path)

    def test_load_graph_from_model(self):
        self.assertEqual(load_graph("free:2", radius=1).vertex_count, 5)


class SerializeTest(unittest.TestCase):

    def test_block_style_in_insertion_order(self):
        text = serialize_config({'z': 1, 'a': [1, 2], 'f': Fraction(1, 2)})
        self.assertTrue(text.startswith("---"))
        self.assertLess(text.index("z:"), text.index("a:"))
        self.assertEqual(yaml.safe_load(text), {'z': 1, 'a': [1, 2], 'f': '1/2'})

    def test_ambiguous_strings_are_quoted(self):
        text = serialize_config({'answer': 'yes', 'rows': (1, 2)})
        self.assertEqual(yaml.safe_load(text), {'answer': 'yes', 'rows': [1, 2]})


@ddt
class SettingsTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    @data(("3", Fraction(3)), ("1/2", Fraction(1, 2)), (0.25, Fraction(1, 4)), (2, Fraction(2)))
    def test_parse_number(self, pair):
        value, expected = pair
        self.assertEqual(parse_number(value), expected)

    def test_parse_number_rejects_text(self):
        with self.assertRaises(InvalidSpecification):
            parse_number("many")

    def test_defaults(self):
        settings = Settings()
        self.assertEqual(settings.delta_cap, 2000)
        self.assertEqual(settings.generator_radius, 3)
        self.assertEqual(settings.divergence_min_slope, Fraction(1, 100))
        self.assertIsNone(settings.budget("lipschitz"))

    def test_file(self):
        path = write_text(os.path.join(self.tmp, "ctmap.toml"), "\n".join([
            "[delta]",
            "cap = 50",
            "[budgets]",
            "lipschitz = \"9/2\"",
            "",
        ]))
        settings = Settings(path)
        self.assertEqual(settings.delta_cap, 50)
        self.assertEqual(settings.delta_samples, 20000)
        self.assertEqual(settings.budget("lipschitz"), Fraction(9, 2))

    def test_missing_file(self):
        with self.assertRaises(InvalidSpecification):
            Settings(os.path.join(self.tmp, "absent.toml"))

    def test_broken_file(self):
        path = write_text(os.path.join(self.tmp, "broken.toml"), "[delta\n")
        with self.assertRaises(InvalidSpecification):
            Settings(path)

    def test_budget_precedence(self):
        path = write_text(os.path.join(self.tmp, "ctmap.toml"),
                          "[budgets]\nlipschitz = 7\ncompat = 3\n")
        ctx = CTMapContext(config=path, budgets={'lipschitz': '5'})
        self.assertEqual(ctx.budget('lipschitz', 1), 5)
        self.assertEqual(ctx.budget('compat', 1), 3)
        self.assertEqual(ctx.budget('concat_k', 1), 1)
