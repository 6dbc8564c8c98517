# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.config import load_graph
from ctmap.const import REPORT_HEADER_QUANTITY
from ctmap.error import InvalidSpecification
from ctmap.hyperbolic import divergence_profile
from ctmap.hyperbolic import spread_quadruple
from ctmap.hyperbolic.audit import AUDIT_DIVERGENCE
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import format_witness
from ctmap.util import split_list


@click.command('divergence', short_help='Growth of paths avoiding a geodesic.')
@click.option(
    '--radius', '-r', 'radius',
    help='Ball radius when INPUT is a model spec.',
    type=int,
    metavar="R"
)
@click.option(
    '--points', '-p', 'points',
    help='Vertices x,y,z,w [default: the ends of a diameter and the '
         'neighbours of its middle].',
    metavar="X,Y,Z,W"
)
@click.option(
    '--A0', '-a', 'A0',
    help='Bound on the Gromov products (x,z)_y and (y,w)_z.',
    type=int,
    default=0,
    show_default=True
)
@click.option(
    '--B', '-b', 'B',
    help='Least admissible d(y,z).',
    type=int,
    default=1,
    show_default=True
)
@click.argument('source', metavar="INPUT")
@click.pass_context
def cmd_divergence(ctx, source, radius=None, points=None, A0=0, B=1):
    """
    For growing D, measure the shortest path from x to w that keeps out of
    the D-neighbourhood of the geodesic [y,z] of INPUT, and check that the
    logarithm of its length grows with D.
    """
    config = RunConfig.from_context(ctx.obj, 'divergence', [source], {
        'radius': radius,
        'points': split_list(points),
        'A0': A0,
        'B': B,
    })
    sys.exit(run(config, ctx.obj))


@pipeline('divergence')
def ctmap_divergence(ctx, config):
    settings = ctx.settings
    radius = config.options.get('radius') or settings.generator_radius
    g = load_graph(config.inputs[0], radius, settings.tiling_max_radius)

    points = config.options.get('points') or spread_quadruple(g)
    if len(points) != 4:
        raise InvalidSpecification(
            "Expected four vertices x,y,z,w, got %s" % format_witness(points))
    for v in points:
        g.check_vertex(v)

    profile = divergence_profile(
        g, *points, A0=config.options.get('A0', 0), B=config.options.get('B', 1))
    result = profile.audit(
        g.digest[:16],
        min_slope=ctx.budget(AUDIT_DIVERGENCE, settings.divergence_min_slope))

    rows = [
        ["length:D=%d" % D, "none" if length is None else length, ""]
        for D, length in profile.rows
    ]
    rows.append(["slope", result.measured, format_witness(points)])
    rows.append(["min_slope", result.budget, "pass" if result.passed else "fail"])

    return Report(
        REPORT_HEADER_QUANTITY, rows, passed=result.passed,
        details={'graph_digest': g.digest, 'points': [int(v) for v in points]},
    )
