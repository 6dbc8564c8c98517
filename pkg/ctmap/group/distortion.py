# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

from ctmap.error import InvalidSpecification
from ctmap.error import SubgroupBallEmpty
from ctmap.error import UnsupportedSubgroup
from ctmap.group.cayley import word_ball
from ctmap.group.model import ModelKind
from ctmap.group.words import invert
from ctmap.group.words import multiply
from ctmap.logger import logger

SUBGROUP_FIBER = "fiber"
SUBGROUP_WHOLE = "whole"
SUBGROUP_FACTOR = "factor"


class Subgroup(namedtuple('_Subgroup', ['name', 'contains', 'project', 'model'])):
    """
    A free subgroup with decidable membership.  ``project`` writes a member
    as a reduced word in the subgroup's own free basis, which gives the
    intrinsic word metric.
    """

    def distance(self, x, y):
        return len(multiply(invert(self.project(x)), self.project(y)))


def _free_letters_within(word, k):
    return all(abs(x) <= k for x in word)


def make_subgroup(model, name):
    if model.kind is ModelKind.FREE:
        if name == SUBGROUP_WHOLE:
            return Subgroup(name, lambda x: True, lambda x: x, model)
        if name.startswith(SUBGROUP_FACTOR + ":"):
            k = int(name.split(":", 1)[1])
            if 1 <= k <= model.rank:
                return Subgroup(
                    name, lambda x: _free_letters_within(x, k), lambda x: x, model)

    if model.kind is ModelKind.FREE_BY_CYCLIC:
        if name == SUBGROUP_FIBER:
            return Subgroup(name, lambda x: x[1] == 0, lambda x: x[0], model)
        if name.startswith(SUBGROUP_FACTOR + ":"):
            k = int(name.split(":", 1)[1])
            if 1 <= k <= model.rank:
                return Subgroup(
                    name,
                    lambda x: x[1] == 0 and _free_letters_within(x[0], k),
                    lambda x: x[0],
                    model,
                )

    raise UnsupportedSubgroup(name, str(model))


def intrinsic_diameter(subgroup, elements):
    """
    Diameter of ``elements`` in the subgroup's free word metric by a double
    sweep, which is exact for tree metrics.
    """
    start = elements[0]
    far = elements[max(
        range(len(elements)),
        key=lambda i: (subgroup.distance(start, elements[i]), -i)
    )]
    return max(subgroup.distance(far, y) for y in elements)


class DistortionTable(namedtuple('_DistortionTable', ['rows'])):
    """Rows ``(R, diameter, disto)`` sorted by ``R``."""

    @property
    def ratios(self):
        return [
            b[2] / a[2] for a, b in zip(self.rows, self.rows[1:]) if a[2] != 0
        ]

    @property
    def superlinear(self):
        r = self.ratios
        return all(x <= y for x, y in zip(r, r[1:]))

    def csv_rows(self):
        return [
            [R, diam, disto.numerator, disto.denominator]
            for R, diam, disto in self.rows
        ]


def distortion_profile(model, subgroup, R_values):
    """
    ``disto(R) = diam_H(H n B(R)) / R`` for each ``R``, with ``B(R)`` the
    ambient ball and ``diam_H`` taken in the subgroup's own word metric.
    """
    R_values = sorted(set(int(R) for R in R_values))
    if isinstance(subgroup, str):
        subgroup = make_subgroup(model, subgroup)

    order, length = word_ball(model, R_values[-1])
    members = [x for x in order if subgroup.contains(x)]

    rows = []
    for R in R_values:
        if R <= 0:
            raise InvalidSpecification("Radii must be positive, got %d" % R)
        inside = [x for x in members if length[x] <= R]
        if not inside:
            raise SubgroupBallEmpty(R)

        diameter = intrinsic_diameter(subgroup, inside)
        rows.append((R, diameter, Fraction(diameter, R)))
        logger.debug("disto(%d) = %d/%d over %d elements", R, diameter, R, len(inside))

    return DistortionTable(rows)
