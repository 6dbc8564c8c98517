# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.const import REPORT_HEADER_TWIST
from ctmap.group import dehn_twist_product
from ctmap.group import distortion_window
from ctmap.group import rho_curve
from ctmap.group import twist_bounds_check
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import split_list


@click.command('twist', short_help='Dehn twist product bounds.')
@click.option(
    '--first', '-f', 'first',
    help='Which twist shape comes first.',
    type=click.Choice(['lower', 'upper']),
    default='lower',
    show_default=True
)
@click.option(
    '--big', '-b', 'big',
    help='Allow entries beyond 63 bits.',
    is_flag=True
)
@click.argument('coefficients', metavar="A")
@click.pass_context
def cmd_twist(ctx, coefficients, first='lower', big=False):
    """
    Multiply alternating lower and upper twist matrices with the
    comma-separated coefficients A and check that the largest entry lies
    between prod a(i) and prod (a(i) + 2).
    """
    config = RunConfig.from_context(ctx.obj, 'twist', [coefficients], {
        'a': split_list(coefficients),
        'first': first,
        'big': big,
    })
    sys.exit(run(config, ctx.obj))


@pipeline('twist')
def ctmap_twist(ctx, config):
    a = config.options.get('a', [])
    first = config.options.get('first', 'lower')
    big = config.options.get('big', False)

    sequence = dehn_twist_product(a, first=first, big=big)
    bounds = twist_bounds_check(a, first=first, big=big)
    low, high = distortion_window(a)

    return Report(
        REPORT_HEADER_TWIST,
        [[bounds.lower, bounds.proxy, bounds.upper, "pass" if bounds.passed else "fail"]],
        passed=bounds.passed,
        details={
            'product': sequence.as_lists(),
            'determinant': int(sequence.determinant),
            'rho': list(rho_curve(a, first=first, big=big)),
            'distortion_window': [str(low), str(high)],
        },
    )
