# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click
import numpy as np

from ctmap.config import load_graph
from ctmap.const import REPORT_HEADER_AUDIT
from ctmap.graph import delta_four_point
from ctmap.hyperbolic import concat_path
from ctmap.hyperbolic import concat_projection_check
from ctmap.hyperbolic import inner_product_bound_audit
from ctmap.hyperbolic import projection_lipschitz_audit
from ctmap.hyperbolic import QIEstimate
from ctmap.hyperbolic.audit import AUDIT_CONCAT_EPSILON
from ctmap.hyperbolic.audit import AUDIT_CONCAT_K
from ctmap.hyperbolic.audit import AUDIT_INNER_PRODUCT
from ctmap.hyperbolic.audit import AUDIT_LIPSCHITZ
from ctmap.hyperbolic.audit import concat_budget
from ctmap.hyperbolic.audit import lipschitz_budget
from ctmap.logger import logger
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig


@click.command('project', short_help='Audit nearest-point projections.')
@click.option(
    '--radius', '-r', 'radius',
    help='Ball radius when INPUT is a model spec.',
    type=int,
    metavar="R"
)
@click.option(
    '--count', '-n', 'count',
    help='Number of random geodesics to audit.',
    type=int,
    default=20,
    show_default=True
)
@click.argument('source', metavar="INPUT")
@click.pass_context
def cmd_project(ctx, source, radius=None, count=20):
    """
    Draw geodesics of INPUT with the run seed and audit the projection onto
    each: its Lipschitz constant, the quasigeodesic constants of the path
    through the projection point and a Gromov product bound along it.
    """
    config = RunConfig.from_context(ctx.obj, 'project', [source], {
        'radius': radius,
        'count': count,
    })
    sys.exit(run(config, ctx.obj))


def random_geodesics(g, count, seed):
    """``count`` pairs ``a < b`` with a probe vertex each, seeded."""
    rng = np.random.default_rng(seed)
    n = g.vertex_count
    out = []
    if n < 2:
        return out
    for _ in range(count):
        a, b = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
        x = int(rng.integers(n))
        out.append((g.geodesic(a, b), x))
    return out


@pipeline('project')
def ctmap_project(ctx, config):
    settings = ctx.settings
    radius = config.options.get('radius') or settings.generator_radius
    g = load_graph(config.inputs[0], radius, settings.tiling_max_radius)

    if g.vertex_count > settings.delta_cap:
        delta = delta_four_point(g, sample=settings.delta_samples, seed=config.seed).delta
        logger.warning("delta sampled on %d vertices: %s", g.vertex_count, delta)
    else:
        delta = delta_four_point(g, cap=None, progress=ctx.verbose).delta

    lipschitz = ctx.budget(AUDIT_LIPSCHITZ, lipschitz_budget(delta))
    K, epsilon = concat_budget(delta)
    concat = QIEstimate(ctx.budget(AUDIT_CONCAT_K, K), ctx.budget(AUDIT_CONCAT_EPSILON, epsilon))
    inner = ctx.budget(AUDIT_INNER_PRODUCT)

    results = []
    for mu, x in random_geodesics(g, config.options.get('count', 20), config.seed):
        z_index = len(mu) // 2
        results.append(projection_lipschitz_audit(g, mu, delta, budget=lipschitz))
        results.append(concat_projection_check(g, x, mu, z_index, delta, budget=concat))

        path = concat_path(g, x, mu, z_index)
        if len(path) >= 3:
            results.append(inner_product_bound_audit(
                g, path, 0, len(path) // 2, len(path) - 1, delta=delta, budget=inner))

    return Report(
        REPORT_HEADER_AUDIT,
        [r.row() for r in results],
        passed=all(r.passed for r in results),
        details={'graph_digest': g.digest, 'delta': str(delta)},
    )
