# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.config import load_tree_spec
from ctmap.const import REPORT_HEADER_QUANTITY
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.tree import assemble_total_space
from ctmap.tree import check_family
from ctmap.tree import tree_projection_gap
from ctmap.util import format_witness


@click.command('assemble', short_help='Assemble the total space of a tree of spaces.')
@click.argument('spec', metavar="SPEC")
@click.pass_context
def cmd_assemble(ctx, spec):
    """
    Build the total space of the tree-of-spaces file SPEC and check that
    the projection to the tree does not increase distances.
    """
    config = RunConfig.from_context(ctx.obj, 'assemble', [spec])
    sys.exit(run(config, ctx.obj))


def load_instance(ctx, config, check=True):
    """
    Load and assemble the tree-of-spaces file of ``config``.  With ``check``
    the build fails unless the spaces and attach maps meet the declared
    family constants.
    """
    settings = ctx.settings
    tos = load_tree_spec(
        config.inputs[0],
        radius=settings.generator_radius,
        tiling_cap=settings.tiling_max_radius,
    )
    total = assemble_total_space(tos)
    if check:
        check_family(tos, total, cap=config.cap or settings.delta_cap)
    return tos, total


@pipeline('assemble')
def ctmap_assemble(ctx, config):
    tos, total = load_instance(ctx, config)
    gap, witness = tree_projection_gap(total)

    rows = [
        ["tree_vertices", tos.vertex_count, ""],
        ["tree_edges", len(tos.edges), ""],
        ["vertices", total.graph.vertex_count, ""],
        ["edges", total.graph.edge_count, ""],
        ["projection_gap", gap, format_witness(witness)],
    ]
    return Report(
        REPORT_HEADER_QUANTITY, rows, passed=gap >= 0,
        details={'name': tos.name, 'total_digest': total.graph.digest},
    )
