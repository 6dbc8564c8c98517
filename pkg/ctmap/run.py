# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import os
from collections import namedtuple

import click

from ctmap.config import serialize_config
from ctmap.const import ERROR_FILENAME
from ctmap.const import EXIT_AUDIT_FAILURE
from ctmap.const import EXIT_INPUT_ERROR
from ctmap.const import EXIT_OK
from ctmap.const import MANIFEST_FILENAME
from ctmap.const import REPORT_HEADER_ERROR
from ctmap.const import SPECIFICATION_LATEST
from ctmap.error import CTMapError
from ctmap.error import InputError
from ctmap.error import InvalidSpecification
from ctmap.logger import logger
from ctmap.util import csv_text
from ctmap.util import file_digest
from ctmap.util import mapping_digest
from ctmap.util import pretty_columns
from ctmap.util import text_digest
from ctmap.util import write_text

PIPELINES = {}


class Report(namedtuple('_Report', ['header', 'rows', 'passed', 'details', 'extra_files'])):
    """
    What a pipeline hands back: CSV header and rows, the overall verdict,
    manifest details and any further files (name to text) for the output
    directory.
    """

    def __new__(cls, header, rows, passed=True, details=None, extra_files=None):
        return super(Report, cls).__new__(
            cls, header, rows, bool(passed), details or {}, extra_files or {})


def pipeline(name):
    """Register the decorated function as the pipeline for ``name``."""
    def decorator(func):
        PIPELINES[name] = func
        return func
    return decorator


class RunConfig(object):
    """
    One invocation: command, inputs and options plus the global seed,
    budgets, output directory, mode and cap.
    """

    def __init__(self, command, inputs, options=None, seed=0, budgets=None,
                 out=None, mode=None, cap=None):
        self.command = command
        self.inputs = list(inputs)
        self.options = dict(options or {})
        self.seed = seed
        self.budgets = dict(budgets or {})
        self.out = out
        self.mode = mode
        self.cap = cap

    @classmethod
    def from_context(cls, ctx, command, inputs, options=None):
        return cls(
            command, inputs, options,
            seed=ctx.seed,
            budgets=ctx.budgets,
            out=ctx.out,
            mode=ctx.mode,
            cap=ctx.cap,
        )

    def input_records(self):
        records = []
        for source in self.inputs:
            if os.path.isfile(source):
                digest = file_digest(source)
            else:
                digest = text_digest(source)
            records.append({'source': source, 'digest': digest})
        return records

    def as_dict(self):
        """Everything that decides the reports; the output directory does not."""
        return {
            'command': self.command,
            'inputs': self.input_records(),
            'options': {k: _plain(v) for k, v in sorted(self.options.items())},
            'seed': self.seed,
            'budgets': {k: str(v) for k, v in sorted(self.budgets.items())},
            'mode': self.mode,
            'cap': self.cap,
        }

    @property
    def digest(self):
        return mapping_digest(self.as_dict())


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _manifest(config, filename, report_text, passed, status, details):
    manifest = {'specification': SPECIFICATION_LATEST}
    manifest.update(config.as_dict())
    manifest['config_digest'] = config.digest
    manifest['report'] = {
        'file': filename,
        'digest': text_digest(report_text),
    }
    manifest['passed'] = passed
    manifest['exit'] = status
    if details:
        manifest['details'] = details
    return manifest


def _write_error(config, error, status):
    text = csv_text(REPORT_HEADER_ERROR, [[error.kind, str(error)]])
    write_text(os.path.join(config.out, ERROR_FILENAME), text)
    write_text(
        os.path.join(config.out, MANIFEST_FILENAME),
        serialize_config(_manifest(config, ERROR_FILENAME, text, False, status, None))
    )
    return text


def run(config, ctx):
    """
    Execute the pipeline for ``config.command`` and write its reports.
    Returns the exit status: 0 when every audit passes, 1 on a failed audit,
    2 on an input error.
    """
    import ctmap.cmd  # noqa: F401 registers the pipelines

    try:
        func = PIPELINES.get(config.command)
        if func is None:
            raise InvalidSpecification("Unknown command: %s" % config.command)

        logger.debug("Running %s (config %s)", config.command, config.digest[:16])
        report = func(ctx, config)

    except CTMapError as e:
        status = EXIT_INPUT_ERROR if isinstance(e, InputError) else EXIT_AUDIT_FAILURE
        logger.critical(str(e))

        if ctx.verbose:
            import traceback
            logger.critical(traceback.format_exc())

        _write_error(config, e, status)
        return status

    filename = "%s.csv" % config.command
    text = csv_text(report.header, report.rows)
    status = EXIT_OK if report.passed else EXIT_AUDIT_FAILURE

    write_text(os.path.join(config.out, filename), text)
    for name, content in sorted(report.extra_files.items()):
        write_text(os.path.join(config.out, name), content)
    write_text(
        os.path.join(config.out, MANIFEST_FILENAME),
        serialize_config(_manifest(
            config, filename, text, report.passed, status, report.details))
    )

    logger.debug("Report:\n%s", pretty_columns(
        [[str(c) for c in report.header]] + [[str(c) for c in row] for row in report.rows]))
    click.echo(text, nl=False)

    if not report.passed:
        logger.error("One or more audits failed; see %s", filename)

    return status
