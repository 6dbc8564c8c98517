# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import logging
import os

from ctmap.const import MODE_CANONICAL
from ctmap.logger import logger
from ctmap.settings import parse_number
from ctmap.settings import Settings


class CTMapContext:
    """
    Context object shared by every ctmap command: verbosity, settings,
    the sampling seed, budget overrides and the report directory.
    """

    _verbose = False
    _seed = 0
    _mode = MODE_CANONICAL
    _cap = None

    def __init__(self, verbose=False, config=None, seed=0, budgets=None,
                 out=None, mode=MODE_CANONICAL, cap=None):
        self.verbose = verbose
        self._settings = Settings(config)
        self._seed = seed
        self._budgets = {}
        self._out = out if out is not None else os.path.join(os.getcwd(), "reports")
        self._mode = mode
        self._cap = cap
        self.obj = self

        for audit, value in (budgets or {}).items():
            self._budgets[audit] = parse_number(value)

    @property
    def verbose(self):
        return self._verbose

    @verbose.setter
    def verbose(self, verbose):
        self._verbose = verbose
        if verbose:
            logger.setLevel(logging.DEBUG)
        else:
            logger.setLevel(logging.INFO)

    @property
    def settings(self):
        return self._settings

    @property
    def seed(self):
        return self._seed

    @property
    def mode(self):
        return self._mode

    @property
    def cap(self):
        return self._cap

    @property
    def out(self):
        return self._out

    @property
    def budgets(self):
        return dict(self._budgets)

    def budget(self, audit, default=None):
        """
        Budget for an audit: command-line override first, then the settings
        file, then ``default``.
        """
        if audit in self._budgets:
            return self._budgets[audit]

        value = self._settings.budget(audit)
        if value is not None:
            return value

        return default
