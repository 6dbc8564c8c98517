# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from ctmap.error import EndpointOutsideDomain


def phi_map(tos, v):
    """
    ``phi_v``: from the attach image in the parent space to the attach image
    in the space at ``v``, through the incoming edge space.
    """
    e = tos.incoming_edge(v)
    parent = e.other(v)
    source = e.attach(parent)
    target = e.attach(v)
    return {source[x]: target[x] for x in range(e.space.vertex_count)}


def capital_phi(tos, v, mu):
    """The canonical geodesic in ``X_v`` joining the images of ``mu``'s ends."""
    phi = phi_map(tos, v)
    for end in (mu.start, mu.end):
        if end not in phi:
            raise EndpointOutsideDomain(end)
    return tos.space(v).geodesic(phi[mu.start], phi[mu.end])
