# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.config import load_graph
from ctmap.const import REPORT_HEADER_QUANTITY
from ctmap.graph import delta_four_point
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import format_witness


@click.command('delta', short_help='Four-point hyperbolicity constant.')
@click.option(
    '--radius', '-r', 'radius',
    help='Ball radius when INPUT is a model spec.',
    type=int,
    metavar="R"
)
@click.option(
    '--sample', '-s', 'sample',
    help='Draw N quadruples instead of scanning all of them.',
    type=int,
    metavar="N"
)
@click.argument('source', metavar="INPUT")
@click.pass_context
def cmd_delta(ctx, source, radius=None, sample=None):
    """
    Compute the least delta for which every quadruple of INPUT satisfies the
    four-point condition.  INPUT is an edge-list file, a YAML graph file or
    a model spec such as free:2 or tiling:7:3.
    """
    config = RunConfig.from_context(ctx.obj, 'delta', [source], {
        'radius': radius,
        'sample': sample,
    })
    sys.exit(run(config, ctx.obj))


@pipeline('delta')
def ctmap_delta(ctx, config):
    settings = ctx.settings
    radius = config.options.get('radius') or settings.generator_radius
    g = load_graph(config.inputs[0], radius, settings.tiling_max_radius)

    report = delta_four_point(
        g,
        cap=config.cap or settings.delta_cap,
        sample=config.options.get('sample'),
        seed=config.seed,
        progress=ctx.verbose,
    )

    rows = [
        ["delta", report.delta, format_witness(report.witness)],
        ["vertices", g.vertex_count, ""],
        ["quadruples", report.quadruples_scanned, ""],
        ["sampled", "yes" if report.sampled else "no", ""],
    ]
    return Report(REPORT_HEADER_QUANTITY, rows, details={'graph_digest': g.digest})
