# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .cayley import cayley_ball
from .cayley import word_ball
from .distortion import distortion_profile
from .distortion import DistortionTable
from .distortion import make_subgroup
from .distortion import Subgroup
from .model import FreeByCyclicModel
from .model import FreeModel
from .model import is_model_spec
from .model import ModelKind
from .model import parse_model
from .model import TilingModel
from .tiling import tiling_ball
from .twist import dehn_twist_product
from .twist import distortion_window
from .twist import rho_curve
from .twist import twist_bounds_check
from .twist import TwistSequence
from .words import Automorphism
from .words import format_word
from .words import parse_automorphism
from .words import parse_word
