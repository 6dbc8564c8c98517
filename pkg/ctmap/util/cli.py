# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import click
from click.formatting import wrap_text
from click.termui import _ansi_colors
from click.termui import _ansi_reset_all

CONTEXT_SETTINGS = dict(
    help_option_names=['-h', '--help'],
)

COMMAND_SECTIONS = (
    ("Graph commands", ("delta", "project", "qconvex", "divergence")),
    ("Tree-of-spaces commands", ("assemble", "verify", "ladder", "mn-profile")),
    ("Group commands", ("distortion", "twist")),
)


def _colorize(text, color=None):
    if not color:
        return text
    try:
        return '\033[%dm' % (_ansi_colors[color]) + text + _ansi_reset_all
    except KeyError:
        raise TypeError('Unknown color %r' % color)


def split_list(text, cast=int):
    """Parse ``1,2,3`` into ``[1, 2, 3]``; empty text gives ``[]``."""
    if text is None or not text.strip():
        return []
    try:
        return [cast(part.strip()) for part in text.split(',') if part.strip()]
    except ValueError:
        raise click.BadParameter("expected a comma-separated list: %s" % text)


def parse_budgets(values, known=None):
    """
    Turn repeated ``audit=value`` options into a mapping.  With ``known``
    only those audit names are accepted.
    """
    budgets = {}
    for item in values or ():
        if '=' not in item:
            raise click.BadParameter("expected audit=value, got %s" % item)
        audit, value = item.split('=', 1)
        audit = audit.strip()
        if known is not None and audit not in known:
            raise click.BadParameter("unknown audit %s; expected one of %s" % (
                audit, ", ".join(known)))
        budgets[audit] = value.strip()
    return budgets


class CTMapHelpFormatter(click.HelpFormatter):
    def __init__(self, headers_color=None, options_color=None, *args, **kwargs):
        self.headers_color = headers_color
        self.options_color = options_color
        super(CTMapHelpFormatter, self).__init__(*args, **kwargs)

    def write_usage(self, prog, args='', prefix='Usage: '):
        super(CTMapHelpFormatter, self).write_usage(
            prog, args, prefix=_colorize(prefix, color=self.headers_color))

    def write_heading(self, heading):
        super(CTMapHelpFormatter, self).write_heading(
            _colorize(heading, color=self.headers_color))

    def write_text(self, text):
        """Re-indent text, keeping paragraphs."""
        text_width = max(self.width - self.current_indent, 11)
        indent = ' ' * self.current_indent
        self.write(wrap_text(text, text_width,
                             initial_indent=indent,
                             subsequent_indent=indent,
                             preserve_paragraphs=True))
        self.write('\n')

    def write_dl(self, rows, **kwargs):
        colorized_rows = [(_colorize(row[0], self.options_color), row[1])
                          for row in rows]
        super(CTMapHelpFormatter, self).write_dl(colorized_rows, **kwargs)


class CTMapHelpMixin(object):
    def __init__(self, help_headers_color=None, help_options_color=None,
                 *args, **kwargs):
        self.help_headers_color = help_headers_color
        self.help_options_color = help_options_color
        super(CTMapHelpMixin, self).__init__(*args, **kwargs)

    def get_help(self, ctx):
        formatter = CTMapHelpFormatter(
            width=ctx.terminal_width or 120,
            max_width=ctx.max_content_width,
            headers_color=self.help_headers_color,
            options_color=self.help_options_color)
        self.format_help(ctx, formatter)
        return formatter.getvalue().rstrip('\n')


class CTMapHelpGroup(CTMapHelpMixin, click.Group):
    def __init__(self, *args, **kwargs):
        super(CTMapHelpGroup, self).__init__(*args, **kwargs)
        self.help_headers_color = 'white'
        self.help_options_color = 'white'

    def command(self, *args, **kwargs):
        kwargs.setdefault('cls', CTMapHelpCommand)
        kwargs.setdefault('help_headers_color', self.help_headers_color)
        kwargs.setdefault('help_options_color', self.help_options_color)
        return super(CTMapHelpGroup, self).command(*args, **kwargs)

    def format_commands(self, ctx, formatter):
        """List the commands under the kind of object they work on."""
        names = [n for n in self.list_commands(ctx)
                 if not getattr(self.get_command(ctx, n), 'hidden', False)]
        if not names:
            return

        limit = formatter.width - 6 - max(len(n) for n in names)
        sections = list(COMMAND_SECTIONS)
        grouped = set(n for _, members in sections for n in members)
        rest = tuple(n for n in names if n not in grouped)
        if rest:
            sections.append(("Other commands", rest))

        for title, members in sections:
            rows = [(n, self.get_command(ctx, n).get_short_help_str(limit))
                    for n in members if n in names]
            if rows:
                with formatter.section(title):
                    formatter.write_dl(rows)

    def format_epilog(self, ctx, formatter):
        if self.epilog:
            formatter.write(self.epilog)


class CTMapHelpCommand(CTMapHelpMixin, click.Command):
    pass
