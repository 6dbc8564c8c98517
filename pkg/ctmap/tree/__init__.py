# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .instances import automorphism_table
from .instances import identity_table
from .instances import product_tree
from .instances import twisted_tree
from .maps import capital_phi
from .maps import phi_map
from .total import assemble_total_space
from .total import Fiber
from .total import TotalSpace
from .total import tree_projection_gap
from .tree import FamilyParams
from .tree import TreeEdge
from .tree import TreeOfSpaces
from .verify import check_family
from .verify import qi_audits
from .verify import verify_hyperbolicity
from .verify import verify_qi_embedded
from .verify import verify_uniform_properness
