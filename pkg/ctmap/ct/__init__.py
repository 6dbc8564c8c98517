# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .profile import criterion_check
from .profile import CriterionReport
from .profile import CTProfile
from .profile import ladder_lower_bound_check
from .profile import mn_profile
from .profile import mode_agreement
from .profile import ProfileRow
from .profile import properness_modulus
from .profile import ProperTable
from .profile import tangent_family
