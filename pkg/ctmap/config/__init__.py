# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .loader import load_graph
from .loader import load_tree_spec
from .loader import tree_from_mapping
from .serialize import serialize_config
from .validation import validate_specification
