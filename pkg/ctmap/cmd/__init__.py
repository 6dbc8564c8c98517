# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .assemble import cmd_assemble
from .delta import cmd_delta
from .divergence import cmd_divergence
from .distortion import cmd_distortion
from .ladder import cmd_ladder
from .mn_profile import cmd_mn_profile
from .project import cmd_project
from .qconvex import cmd_qconvex
from .twist import cmd_twist
from .verify import cmd_verify
