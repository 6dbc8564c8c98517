# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import click

from ctmap import __program__
from ctmap import __version__
from ctmap.cmd import cmd_assemble
from ctmap.cmd import cmd_delta
from ctmap.cmd import cmd_distortion
from ctmap.cmd import cmd_divergence
from ctmap.cmd import cmd_ladder
from ctmap.cmd import cmd_mn_profile
from ctmap.cmd import cmd_project
from ctmap.cmd import cmd_qconvex
from ctmap.cmd import cmd_twist
from ctmap.cmd import cmd_verify
from ctmap.const import MODES
from ctmap.context import CTMapContext
from ctmap.hyperbolic.audit import AUDITS
from ctmap.logger import logger
from ctmap.util.cli import CONTEXT_SETTINGS
from ctmap.util.cli import CTMapHelpGroup
from ctmap.util.cli import parse_budgets


@click.option(
    '--verbose', '-v', 'verbose',
    help='Enables verbose mode.', is_flag=True
)
@click.option(
    '--timestamps', '-T', 'use_timestamps',
    help='Show timestamps in output logs.',
    is_flag=True
)
@click.option(
    '--no-color', '-C', 'no_color',
    help='Do not use colour in output logs.',
    is_flag=True
)
@click.option(
    '--config', 'config',
    help='TOML settings file.',
    type=click.Path(exists=True, dir_okay=False),
    metavar="FILE"
)
@click.option(
    '--seed', 'seed',
    help='Seed for every sampled scan.',
    type=int,
    default=0,
    show_default=True
)
@click.option(
    '--budget', 'budgets',
    help='Override an audit budget, e.g. lipschitz=5.  Repeatable.',
    multiple=True,
    metavar="AUDIT=VALUE"
)
@click.option(
    '--out', 'out',
    help='Report directory [default: ./reports].',
    type=click.Path(file_okay=False),
    metavar="DIR"
)
@click.option(
    '--mode', 'mode',
    help='Geodesic mode of the convexity and profile scans.',
    type=click.Choice(MODES),
    default=MODES[0],
    show_default=True
)
@click.option(
    '--cap', 'cap',
    help='Vertex cap of exhaustive scans [default: from settings].',
    type=int,
    metavar="N"
)
@click.group(cls=CTMapHelpGroup, context_settings=CONTEXT_SETTINGS, epilog="""
Exit status:
  0  every audit passed
  1  an audit failed; witnesses are in the report
  2  the input could not be used; see error.csv

Reports:
  Every command writes <command>.csv and manifest.yaml into --out and
  echoes the CSV.  Re-running the same configuration reproduces them
  byte for byte.
""")
@click.version_option(version=__version__, prog_name=__program__)
@click.pass_context
def ctmap(ctx, verbose=False, use_timestamps=False, no_color=False,
          config=None, seed=0, budgets=(), out=None, mode=MODES[0], cap=None):
    logger.use_timestamps = use_timestamps
    logger.use_color = not no_color

    ctx.obj = CTMapContext(
        verbose=verbose,
        config=config,
        seed=seed,
        budgets=parse_budgets(budgets, known=AUDITS),
        out=out,
        mode=mode,
        cap=cap,
    )


ctmap.add_command(cmd_delta)
ctmap.add_command(cmd_project)
ctmap.add_command(cmd_qconvex)
ctmap.add_command(cmd_divergence)
ctmap.add_command(cmd_assemble)
ctmap.add_command(cmd_verify)
ctmap.add_command(cmd_ladder)
ctmap.add_command(cmd_mn_profile)
ctmap.add_command(cmd_distortion)
ctmap.add_command(cmd_twist)
