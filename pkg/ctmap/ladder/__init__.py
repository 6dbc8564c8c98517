# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .ladder import attach_quasiconvexity
from .ladder import build_b1
from .ladder import build_ladder
from .ladder import Ladder
from .ladder import ladder_constants
from .ladder import LadderConstants
from .retraction import audit_quasiconvexity
from .retraction import audit_retraction_lipschitz
from .retraction import audit_vertical_bound
from .retraction import retract
from .retraction import Retraction
from .retraction import retraction_report
from .retraction import RetractionReport
