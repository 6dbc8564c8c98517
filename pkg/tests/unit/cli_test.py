# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os

import yaml
from click.testing import CliRunner

from ctmap import ctmap
from tests import unittest
from tests.helpers import product_spec
from tests.helpers import write_text
from tests.helpers import write_yaml


def read(path):
    with io.open(path, encoding='utf-8') as fh:
        return fh.read()


class CLITestCase(unittest.TestCase):

    def invoke(self, *args):
        return self.runner.invoke(ctmap.ctmap, ['--out', 'out'] + list(args))

    def setUp(self):
        self.runner = CliRunner()

    def test_version(self):
        result = self.runner.invoke(ctmap.ctmap, ['--version'])
        assert result.exit_code == 0
        assert 'ctmap, version' in result.output

    def test_help(self):
        result = self.runner.invoke(ctmap.ctmap, ['--help'])
        assert result.exit_code == 0
        assert 'Usage: ctmap [OPTIONS] COMMAND [ARGS]...' in result.output
        assert 'Tree-of-spaces commands' in result.output
        assert 'mn-profile' in result.output
        assert 'divergence' in result.output

    def test_delta(self):
        with self.runner.isolated_filesystem():
            write_text("p4.txt", "0 1\n1 2\n2 3\n")
            result = self.invoke('delta', 'p4.txt')

            assert result.exit_code == 0, result.output
            assert result.output.startswith("quantity,value,witness\n")
            assert "delta,0,0-1-2-3\n" in result.output
            assert os.path.isfile(os.path.join("out", "delta.csv"))

            manifest = yaml.safe_load(read(os.path.join("out", "manifest.yaml")))
            assert manifest['command'] == 'delta'
            assert manifest['exit'] == 0
            assert manifest['report']['file'] == 'delta.csv'

    def test_default_report_directory(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(ctmap.ctmap, ['twist', '2,2'])
            assert result.exit_code == 0
            assert os.path.isfile(os.path.join("reports", "twist.csv"))

    def test_twist(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('twist', '2,2')
            assert result.exit_code == 0
            assert result.output == "lower,proxy,upper,pass\n4,5,16,pass\n"

            manifest = yaml.safe_load(read(os.path.join("out", "manifest.yaml")))
            assert manifest['options']['first'] == 'lower'
            assert manifest['details']['product'] == [[1, 2], [2, 5]]
            assert manifest['details']['rho'] == [1, 2]

    def test_twist_rejects_small_coefficients(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('twist', '2,1')
            assert result.exit_code == 2
            assert "InvalidCoefficient" in read(os.path.join("out", "error.csv"))

            manifest = yaml.safe_load(read(os.path.join("out", "manifest.yaml")))
            assert manifest['passed'] is False
            assert manifest['report']['file'] == 'error.csv'

    def test_reports_are_reproducible(self):
        with self.runner.isolated_filesystem():
            first = self.runner.invoke(ctmap.ctmap, ['--out', 'a', 'twist', '2,3,2'])
            second = self.runner.invoke(ctmap.ctmap, ['--out', 'b', 'twist', '2,3,2'])
            assert first.exit_code == second.exit_code == 0
            assert first.output == second.output
            assert read(os.path.join("a", "manifest.yaml")) == \
                read(os.path.join("b", "manifest.yaml"))

    def test_assemble(self):
        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", product_spec(length=2, radius=2))
            result = self.invoke('assemble', 'tree.yaml')

            assert result.exit_code == 0, result.output
            assert "tree_vertices,2,\n" in result.output
            assert "vertices,15,\n" in result.output
            assert "projection_gap,0,0-0\n" in result.output

    def test_malformed_tree_spec(self):
        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", {'specification': '1.0', 'edges': []})
            result = self.invoke('ladder', 'tree.yaml')

            assert result.exit_code == 2
            assert "InvalidSpecification" in read(os.path.join("out", "error.csv"))

    def test_missing_tree_spec(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('assemble', 'absent.yaml')
            assert result.exit_code == 2

    def test_ladder(self):
        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", product_spec(length=3, radius=3))
            result = self.invoke('ladder', '--C', '0', '--D', '0', 'tree.yaml')

            assert result.exit_code == 0, result.output
            dump = yaml.safe_load(read(os.path.join("out", "ladder.yaml")))
            assert dump['base'] == [0, 1, 3, 5]

    def test_budget_must_name_a_value(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(ctmap.ctmap, ['--budget', 'lipschitz', 'twist', '2'])
            assert result.exit_code != 0

    def test_builds_check_the_declared_constants(self):
        spec = product_spec(length=2, radius=2)
        # aa <-> AA moves a and aa three apart
        spec['edges'][0]['hi'] = [0, 1, 2, 4, 3]

        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", spec)
            for command in ('assemble', 'ladder', 'mn-profile'):
                result = self.invoke(command, 'tree.yaml')
                assert result.exit_code == 1, (command, result.output)

                error = read(os.path.join("out", "error.csv"))
                assert "FamilyConstantsViolated" in error
                assert "qi_embedded:0-1>1" in error

    def test_verify_reports_the_violations(self):
        spec = product_spec(length=2, radius=2)
        spec['edges'][0]['hi'] = [0, 1, 2, 4, 3]

        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", spec)
            result = self.invoke('verify', 'tree.yaml')

            assert result.exit_code == 1
            assert "qi_embedded:0-1>1," in result.output
            assert not os.path.exists(os.path.join("out", "error.csv"))

    def test_budget_names_are_checked(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(ctmap.ctmap, ['--budget', 'bogus=1', 'twist', '2'])
            assert result.exit_code != 0
            assert "unknown audit bogus" in result.output

    def test_divergence_on_a_cycle(self):
        edges = "".join("%d %d\n" % (i, (i + 1) % 20) for i in range(20))
        with self.runner.isolated_filesystem():
            write_text("c20.txt", edges)
            result = self.invoke('divergence', '--points', '0,5,7,12', 'c20.txt')

            assert result.exit_code == 1, result.output
            assert "length:D=0,8,\n" in result.output
            assert "length:D=4,8,\n" in result.output
            assert ",0-5-7-12\n" in result.output
            assert "min_slope," in result.output

    def test_divergence_on_a_tiling(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('divergence', '--radius', '6', 'tiling:7:3')

            assert result.exit_code == 0, result.output
            assert "slope," in result.output
            assert result.output.rstrip("\n").endswith(",pass")

    def test_divergence_needs_four_points(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('divergence', '--points', '0,1,2', '--radius', '2', 'tiling:7:3')
            assert result.exit_code == 2
            assert "InvalidSpecification" in read(os.path.join("out", "error.csv"))

    def test_exhaustive_profile_checks_the_canonical_one(self):
        with self.runner.isolated_filesystem():
            write_yaml("tree.yaml", product_spec(length=2, radius=2))
            result = self.invoke('--mode', 'exhaustive', 'mn-profile', 'tree.yaml')

            assert result.exit_code != 2, result.output
            assert "mode_agreement,pass," in result.output

    def test_undecodable_edge_list(self):
        with self.runner.isolated_filesystem():
            with io.open("bad.txt", 'wb') as fh:
                fh.write(b"0 1\n\xff\xfe 2\n")
            result = self.invoke('delta', 'bad.txt')

            assert result.exit_code == 2
            assert "MalformedEdgeList" in read(os.path.join("out", "error.csv"))
