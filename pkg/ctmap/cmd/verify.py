# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.cmd.assemble import load_instance
from ctmap.const import REPORT_HEADER_AUDIT
from ctmap.hyperbolic.audit import AuditResult
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.tree import qi_audits
from ctmap.tree import verify_hyperbolicity
from ctmap.tree import verify_qi_embedded
from ctmap.tree import verify_uniform_properness

AUDIT_PROPERNESS = "properness"


@click.command('verify', short_help='Verify the declared family constants.')
@click.option(
    '--max-m', '-m', 'max_m',
    help='Largest M of the uniform properness table.',
    type=int,
    default=4,
    show_default=True
)
@click.argument('spec', metavar="SPEC")
@click.pass_context
def cmd_verify(ctx, spec, max_m=4):
    """
    Check the tree-of-spaces file SPEC against its declared delta, K and
    epsilon: every vertex space is measured for hyperbolicity, every attach
    map for its quasi-isometry constants, and the lifts for uniform
    properness.
    """
    config = RunConfig.from_context(ctx.obj, 'verify', [spec], {'max_m': max_m})
    sys.exit(run(config, ctx.obj))


def properness_audits(table, digest):
    """One row per ``M``; a row fails when ``N`` drops below its predecessor."""
    out = []
    previous = 0
    for M, N in table:
        out.append(AuditResult(
            "%s:M=%d" % (AUDIT_PROPERNESS, M), digest, N, "nondecreasing", N >= previous))
        previous = N
    return out


@pipeline('verify')
def ctmap_verify(ctx, config):
    # the same checks run below, reported row by row
    tos, total = load_instance(ctx, config, check=False)

    results = verify_hyperbolicity(tos, cap=config.cap or ctx.settings.delta_cap)
    results += qi_audits(tos, verify_qi_embedded(tos, total))

    table = verify_uniform_properness(
        tos, total, range(1, config.options.get('max_m', 4) + 1))
    results += properness_audits(table, total.graph.digest[:16])

    return Report(
        REPORT_HEADER_AUDIT,
        [r.row() for r in results],
        passed=all(r.passed for r in results),
        details={
            'name': tos.name,
            'family': {k: str(v) for k, v in tos.params._asdict().items()},
            'properness': [[int(M), int(N)] for M, N in table],
        },
    )
