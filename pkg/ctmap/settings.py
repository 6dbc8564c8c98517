# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import os
from fractions import Fraction

import dpath
import toml

from ctmap.const import CTMAPRC_BUDGETS
from ctmap.const import CTMAPRC_CALIBRATE_CAP
from ctmap.const import CTMAPRC_CALIBRATE_MAX_D
from ctmap.const import CTMAPRC_CALIBRATE_SAMPLES
from ctmap.const import CTMAPRC_DELTA_CAP
from ctmap.const import CTMAPRC_DELTA_SAMPLES
from ctmap.const import CTMAPRC_DIVERGENCE_MIN_SLOPE
from ctmap.const import CTMAPRC_GENERATORS_RADIUS
from ctmap.const import CTMAPRC_QCONVEX_EXHAUSTIVE_CAP
from ctmap.const import CTMAPRC_TILING_MAX_RADIUS
from ctmap.const import DEFAULT_CALIBRATE_CAP
from ctmap.const import DEFAULT_CALIBRATE_MAX_D
from ctmap.const import DEFAULT_CALIBRATE_SAMPLES
from ctmap.const import DEFAULT_DELTA_CAP
from ctmap.const import DEFAULT_DELTA_SAMPLES
from ctmap.const import DEFAULT_DIVERGENCE_MIN_SLOPE
from ctmap.const import DEFAULT_EXHAUSTIVE_CAP
from ctmap.const import DEFAULT_GENERATOR_RADIUS
from ctmap.const import DEFAULT_TILING_MAX_RADIUS
from ctmap.error import InvalidSpecification
from ctmap.logger import logger


def parse_number(value):
    """Parse an int, float or 'p/q' string into an exact Fraction."""
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise InvalidSpecification("Not a number: %s" % value)


class Settings(object):
    """Read-only view of a TOML settings file with built-in defaults."""

    _path = None
    _settings = {}

    def __init__(self, path=None):
        self._path = path
        self._settings = {}

        if path is not None:
            if not os.path.exists(path):
                raise InvalidSpecification("Settings file not found: %s" % path)

            with open(path, 'r') as file:
                try:
                    self._settings = toml.loads(file.read())
                except toml.TomlDecodeError as e:
                    raise InvalidSpecification(
                        "Cannot read settings %s: %s" % (path, e))

    @property
    def path(self):
        return self._path

    def get(self, prop, default=None):
        try:
            result = dpath.get(self._settings, prop)
        except KeyError:
            logger.debug('Missed setting lookup: %s', prop)
            result = default

        return result

    def budget(self, audit):
        value = self.get("%s/%s" % (CTMAPRC_BUDGETS, audit))
        if value is None:
            return None
        return parse_number(value)

    def as_dict(self):
        return dict(self._settings)

    @property
    def delta_cap(self):
        return int(self.get(CTMAPRC_DELTA_CAP, DEFAULT_DELTA_CAP))

    @property
    def delta_samples(self):
        return int(self.get(CTMAPRC_DELTA_SAMPLES, DEFAULT_DELTA_SAMPLES))

    @property
    def exhaustive_cap(self):
        return int(self.get(
            CTMAPRC_QCONVEX_EXHAUSTIVE_CAP,
            DEFAULT_EXHAUSTIVE_CAP
        ))

    @property
    def calibrate_cap(self):
        return int(self.get(CTMAPRC_CALIBRATE_CAP, DEFAULT_CALIBRATE_CAP))

    @property
    def calibrate_samples(self):
        return int(self.get(
            CTMAPRC_CALIBRATE_SAMPLES,
            DEFAULT_CALIBRATE_SAMPLES
        ))

    @property
    def calibrate_max_d(self):
        return int(self.get(CTMAPRC_CALIBRATE_MAX_D, DEFAULT_CALIBRATE_MAX_D))

    @property
    def tiling_max_radius(self):
        return int(self.get(
            CTMAPRC_TILING_MAX_RADIUS,
            DEFAULT_TILING_MAX_RADIUS
        ))

    @property
    def generator_radius(self):
        return int(self.get(
            CTMAPRC_GENERATORS_RADIUS,
            DEFAULT_GENERATOR_RADIUS
        ))

    @property
    def divergence_min_slope(self):
        return parse_number(self.get(
            CTMAPRC_DIVERGENCE_MIN_SLOPE,
            DEFAULT_DIVERGENCE_MIN_SLOPE
        ))
