# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import logging
import sys

import click
from tqdm import tqdm

from ctmap import __program__

TIME_FORMAT = "%(asctime)s "
LEVEL_FORMAT = "%(levelname)-8s"
MESSAGE_FORMAT = "%(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOGGING_COLORS = {
    'WARNING':  'yellow',
    'INFO':     'white',
    'DEBUG':    'cyan',
    'CRITICAL': 'red',
    'ERROR':    'red'
}


class CTMapFormatter(logging.Formatter):
    """Level names coloured with click; timestamps only on request."""

    def __init__(self, logger, *args, **kwargs):
        self._logger = logger
        logging.Formatter.__init__(self, *args, **kwargs)

    def format(self, record):
        level = LEVEL_FORMAT
        if self._logger.use_color:
            level = click.style(level, fg=LOGGING_COLORS.get(record.levelname))

        prefix = TIME_FORMAT if self._logger.use_timestamps else ""
        self._style._fmt = "%s[%s] %s" % (prefix, level, MESSAGE_FORMAT)

        return logging.Formatter.format(self, record)


class ProgressSafeHandler(logging.StreamHandler):
    """
    Writes through ``tqdm.write`` so log lines land above an active
    progress bar instead of through it.
    """

    def emit(self, record):
        try:
            tqdm.write(self.format(record), file=self.stream)
            self.flush()
        except Exception:
            self.handleError(record)


class CTMapLogger(logging.Logger):
    _use_timestamps = False
    _use_color = True

    def __init__(self, name):
        logging.Logger.__init__(self, name, logging.WARNING)

        # bound to the stderr of the process, not whatever replaces it later
        handler = ProgressSafeHandler(sys.stderr)
        handler.setFormatter(CTMapFormatter(self, datefmt=DATE_FORMAT))
        self.addHandler(handler)

    @property
    def use_timestamps(self):
        return self._use_timestamps

    @use_timestamps.setter
    def use_timestamps(self, use_timestamps=False):
        self._use_timestamps = use_timestamps

    @property
    def use_color(self):
        return self._use_color

    @use_color.setter
    def use_color(self, use_color=False):
        self._use_color = use_color


logging.setLoggerClass(CTMapLogger)
logger = logging.getLogger(__program__)
logging.setLoggerClass(logging.Logger)
