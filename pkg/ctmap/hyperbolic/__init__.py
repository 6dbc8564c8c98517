# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .audit import AuditResult
from .convexity import quasiconvexity_constant
from .divergence import divergence_profile
from .divergence import DivergenceProfile
from .divergence import spread_quadruple
from .perps import calibrate_perps
from .perps import PerpsConstants
from .projection import nearest_point_position
from .projection import nearest_point_projection
from .projection import projection_compat_audit
from .projection import projection_lipschitz_audit
from .projection import projection_positions
from .quasigeodesic import concat_path
from .quasigeodesic import concat_projection_check
from .quasigeodesic import estimate_qi
from .quasigeodesic import inner_product_bound_audit
from .quasigeodesic import QIEstimate
from .quasigeodesic import quasigeodesic_params
