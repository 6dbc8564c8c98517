# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys
from fractions import Fraction

import click

from ctmap.cmd.assemble import load_instance
from ctmap.cmd.ladder import resolve_constants
from ctmap.const import MODE_CANONICAL
from ctmap.const import MODE_EXHAUSTIVE
from ctmap.const import REPORT_HEADER_PROFILE
from ctmap.ct import criterion_check
from ctmap.ct import ladder_lower_bound_check
from ctmap.ct import mn_profile
from ctmap.ct import mode_agreement
from ctmap.ct import properness_modulus
from ctmap.ct import tangent_family
from ctmap.error import LadderTrivial
from ctmap.graph import delta_four_point
from ctmap.hyperbolic.audit import AUDIT_MODE_AGREEMENT
from ctmap.ladder import audit_quasiconvexity
from ctmap.ladder import audit_vertical_bound
from ctmap.ladder import build_ladder
from ctmap.logger import logger
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig


@click.command('mn-profile', short_help='Cannon-Thurston M(N) profile.')
@click.option(
    '--x0', '-x', 'x0',
    help='Basepoint in the root space.',
    type=int,
    default=0,
    show_default=True
)
@click.option(
    '--n-max', '-n', 'n_max',
    help='Largest N [default: the radius of the root space about x0].',
    type=int
)
@click.option(
    '--C', '-c', 'C',
    help='Ladder neighbourhood constant [default: calibrated].',
    type=int
)
@click.option(
    '--D', '-d', 'D',
    help='Ladder width threshold [default: calibrated].',
    type=int
)
@click.argument('spec', metavar="SPEC")
@click.pass_context
def cmd_mn_profile(ctx, spec, x0=0, n_max=None, C=None, D=None):
    """
    For geodesics of the root space at distance N from x0, measure how far
    from x0 the total-space geodesic between their ends stays, and check it
    against f(N) / (A + 1) - C' with A and C' measured on their ladders.
    """
    config = RunConfig.from_context(ctx.obj, 'mn-profile', [spec], {
        'x0': x0,
        'n_max': n_max,
        'C': C,
        'D': D,
    })
    sys.exit(run(config, ctx.obj))


def ladder_constants_over(ctx, config, tos, total, family, C, D):
    """
    Worst ``A`` and ``C'`` over the ladders of ``family``, with the ladders
    kept for the lower-bound check.
    """
    cap = config.cap or ctx.settings.exhaustive_cap
    A = Fraction(0)
    Cprime = 0
    ladders = []
    for lam in family:
        ladder = build_ladder(tos, total, lam, C, D)
        ladders.append(ladder)
        Cprime = max(Cprime, audit_quasiconvexity(tos, total, ladder, mode=config.mode, cap=cap))
        try:
            A = max(A, audit_vertical_bound(tos, total, ladder).A)
        except LadderTrivial:
            logger.debug("Ladder of %s stays in the root fibre", lam)
    return A, Cprime, ladders


@pipeline('mn-profile')
def ctmap_mn_profile(ctx, config):
    tos, total = load_instance(ctx, config)
    space = tos.space(tos.root)
    x0 = config.options.get('x0', 0)
    space.check_vertex(x0)

    n_max = config.options.get('n_max')
    if n_max is None:
        n_max = int(space.distances_from(x0).max())
    N_values = range(0, n_max + 1)

    family = tangent_family(tos, x0, N_values)
    f_table = properness_modulus(tos, total, x0, N_values)
    cap = config.cap or ctx.settings.exhaustive_cap
    profile = mn_profile(tos, total, x0, family, mode=config.mode, cap=cap)

    checks = []
    if config.mode == MODE_EXHAUSTIVE:
        canonical = mn_profile(tos, total, x0, family, mode=MODE_CANONICAL)
        delta = delta_four_point(total.graph, cap=cap).delta
        checks.append(mode_agreement(
            canonical, profile, ctx.budget(AUDIT_MODE_AGREEMENT, 2 * delta)))

    C, D = resolve_constants(ctx, tos, config.options.get('C'), config.options.get('D'))
    A, Cprime, ladders = ladder_constants_over(ctx, config, tos, total, family, C, D)
    verdict = criterion_check(profile, f_table, A, Cprime)

    f_of = f_table.as_dict()
    basepoint = total.lift(tos.root, x0)
    lower = []
    for lam, ladder in zip(family, ladders):
        N = int(space.distances_from(x0)[list(lam.vertices)].min())
        lower.append(ladder_lower_bound_check(total, ladder, basepoint, f_of[N], A))

    rows = profile.csv_rows() + [verdict.verdict()]
    for check in checks:
        rows.append([check.audit, "pass" if check.passed else "fail",
                     "" if check.witness is None else "N=%d" % check.witness])

    return Report(
        REPORT_HEADER_PROFILE, rows,
        passed=verdict.passed and all(r.passed for r in lower + checks),
        details={
            'basepoint': int(basepoint),
            'A': str(A),
            'Cprime': int(Cprime),
            'C': int(C),
            'D': int(D),
            'f': [[int(N), int(f)] for N, f in f_table.rows],
            'lower_bound': [r.row() for r in lower],
            'checks': [r.row() for r in checks],
        },
    )
