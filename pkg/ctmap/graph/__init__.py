# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .graph import ball
from .graph import build_graph
from .graph import distance
from .graph import geodesic
from .graph import GeodesicSegment
from .graph import gromov_product
from .graph import MetricGraph
from .hyperbolicity import delta_four_point
from .hyperbolicity import four_point_defect
from .hyperbolicity import HyperbolicityReport
from .hyperbolicity import net_approximation
from .hyperbolicity import NetApproximation
from .io import graph_from_mapping
from .io import load_yaml
from .io import parse_edge_list
from .io import read_edge_list
from .io import read_graph
