# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.config import load_graph
from ctmap.const import MODE_CANONICAL
from ctmap.const import MODE_EXHAUSTIVE
from ctmap.const import REPORT_HEADER_QUANTITY
from ctmap.graph import ball
from ctmap.graph import delta_four_point
from ctmap.hyperbolic import calibrate_perps
from ctmap.hyperbolic import quasiconvexity_constant
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import split_list


@click.command('qconvex', short_help='Quasiconvexity constant of a vertex set.')
@click.option(
    '--radius', '-r', 'radius',
    help='Ball radius when INPUT is a model spec.',
    type=int,
    metavar="R"
)
@click.option(
    '--set', '-s', 'vertex_set',
    help='Comma-separated vertex ids [default: vertex 0 and its neighbours].',
    metavar="IDS"
)
@click.option(
    '--perps', '-p', 'perps',
    help='Also calibrate the perpendicular constants (D, C1).',
    is_flag=True
)
@click.argument('source', metavar="INPUT")
@click.pass_context
def cmd_qconvex(ctx, source, radius=None, vertex_set=None, perps=False):
    """
    Measure how far geodesics between points of a vertex set wander from
    it.  In exhaustive mode every geodesic is checked and compared with the
    canonical answer.
    """
    config = RunConfig.from_context(ctx.obj, 'qconvex', [source], {
        'radius': radius,
        'set': split_list(vertex_set),
        'perps': perps,
    })
    sys.exit(run(config, ctx.obj))


@pipeline('qconvex')
def ctmap_qconvex(ctx, config):
    settings = ctx.settings
    radius = config.options.get('radius') or settings.generator_radius
    g = load_graph(config.inputs[0], radius, settings.tiling_max_radius)

    S = config.options.get('set') or sorted(ball(g, 0, 1))
    cap = config.cap or settings.exhaustive_cap
    canonical = quasiconvexity_constant(g, S, mode=MODE_CANONICAL)

    rows = [["qconvex_canonical", canonical, ""]]
    passed = True

    if config.mode == MODE_EXHAUSTIVE:
        exhaustive = quasiconvexity_constant(g, S, mode=MODE_EXHAUSTIVE, cap=cap)
        delta = delta_four_point(g, cap=cap).delta
        passed = exhaustive - canonical <= 2 * delta
        rows.append(["qconvex_exhaustive", exhaustive, ""])
        rows.append(["slack", 2 * delta, "pass" if passed else "fail"])

    if config.options.get('perps'):
        delta = delta_four_point(g, cap=settings.delta_cap).delta
        constants = calibrate_perps(
            g, delta,
            cap=settings.calibrate_cap,
            samples=settings.calibrate_samples,
            max_d=settings.calibrate_max_d,
            seed=config.seed,
            progress=ctx.verbose,
        )
        rows.append(["perps_D", constants.D, ""])
        rows.append(["perps_C1", constants.C1, ""])

    return Report(
        REPORT_HEADER_QUANTITY, rows, passed=passed,
        details={'graph_digest': g.digest, 'set': [int(v) for v in S]},
    )
