# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from fractions import Fraction

SPECIFICATION_LATEST = "1.0"

# Settings lookups (slash paths into the TOML settings file)
CTMAPRC_DELTA_CAP = "delta/cap"
CTMAPRC_DELTA_SAMPLES = "delta/samples"
CTMAPRC_QCONVEX_EXHAUSTIVE_CAP = "qconvex/exhaustive_cap"
CTMAPRC_CALIBRATE_CAP = "calibrate/cap"
CTMAPRC_CALIBRATE_SAMPLES = "calibrate/samples"
CTMAPRC_CALIBRATE_MAX_D = "calibrate/max_d"
CTMAPRC_TILING_MAX_RADIUS = "tiling/max_radius"
CTMAPRC_GENERATORS_RADIUS = "generators/radius"
CTMAPRC_DIVERGENCE_MIN_SLOPE = "divergence/min_slope"
CTMAPRC_BUDGETS = "budgets"

DEFAULT_DELTA_CAP = 2000
DEFAULT_DELTA_SAMPLES = 20000
DEFAULT_EXHAUSTIVE_CAP = 60
DEFAULT_CALIBRATE_CAP = 400
DEFAULT_CALIBRATE_SAMPLES = 20000
DEFAULT_CALIBRATE_MAX_D = 64
DEFAULT_TILING_MAX_RADIUS = 8
DEFAULT_GENERATOR_RADIUS = 3
DEFAULT_DIVERGENCE_MIN_SLOPE = Fraction(1, 100)
DEFAULT_NET_JOIN_RADIUS = 4
DEFAULT_AUTOMORPHISM_SEARCH = 8

# K grid for quasi-isometry estimates: 1, 5/4, ..., 16
QI_GRID_DENOMINATOR = 4
QI_GRID_MAX_K = 16

MODE_CANONICAL = "canonical"
MODE_EXHAUSTIVE = "exhaustive"
MODES = [MODE_CANONICAL, MODE_EXHAUSTIVE]

REPORT_HEADER_QUANTITY = ["quantity", "value", "witness"]
REPORT_HEADER_AUDIT = ["audit", "input_digest", "measured", "budget", "pass"]
REPORT_HEADER_PROFILE = ["N", "f", "M", "mode", "lambda_digest"]
REPORT_HEADER_DISTORTION = ["R", "diam", "disto_num", "disto_den"]
REPORT_HEADER_TWIST = ["lower", "proxy", "upper", "pass"]
REPORT_HEADER_ERROR = ["error", "message"]

MANIFEST_FILENAME = "manifest.yaml"
ERROR_FILENAME = "error.csv"

EXIT_OK = 0
EXIT_AUDIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
