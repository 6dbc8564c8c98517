# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from enum import Enum

from ctmap.error import NotHyperbolicTiling
from ctmap.error import UnknownModel
from ctmap.group.words import format_word
from ctmap.group.words import generators
from ctmap.group.words import IDENTITY
from ctmap.group.words import invert
from ctmap.group.words import multiply
from ctmap.group.words import parse_automorphism
from ctmap.group.words import parse_word
from ctmap.group.words import reduce_word


class ModelKind(Enum):
    FREE = ("free", "free group")
    FREE_BY_CYCLIC = ("fbc", "free-by-cyclic group")
    SURFACE_TILING = ("tiling", "regular tiling of the hyperbolic plane")

    @property
    def tag(self):
        return self.value[0]

    @property
    def description(self):
        return self.value[1]


class FreeModel(object):
    kind = ModelKind.FREE

    def __init__(self, rank):
        if rank < 1:
            raise UnknownModel("free:%s" % rank)
        self.rank = rank

    @property
    def identity(self):
        return IDENTITY

    @property
    def generators(self):
        return generators(self.rank)

    def normal_form(self, element):
        return reduce_word(element)

    def multiply(self, x, y):
        return multiply(x, y)

    def inverse(self, x):
        return invert(x)

    def label(self, element):
        return format_word(element)

    def parse(self, label):
        return parse_word(label, self.rank)

    def __str__(self):
        return "free:%d" % self.rank


class FreeByCyclicModel(object):
    """
    ``F_n x| Z`` with ``t w t^-1 = phi(w)``.  Elements are pairs
    ``(w, k)`` standing for ``w t^k``, so
    ``(u, k)(v, m) = (u phi^k(v), k + m)``.
    """

    kind = ModelKind.FREE_BY_CYCLIC

    def __init__(self, rank, automorphism):
        if automorphism.rank != rank:
            raise UnknownModel("fbc:%d:%s" % (rank, automorphism))
        self.rank = rank
        self.automorphism = automorphism
        automorphism.inverse()

    @property
    def identity(self):
        return (IDENTITY, 0)

    @property
    def generators(self):
        out = [(g, 0) for g in generators(self.rank)]
        out.append((IDENTITY, 1))
        out.append((IDENTITY, -1))
        return out

    def normal_form(self, element):
        word, k = element
        return (reduce_word(word), int(k))

    def multiply(self, x, y):
        (u, k), (v, m) = x, y
        return (multiply(u, self.automorphism.power(k, v)), k + m)

    def inverse(self, x):
        w, k = x
        return (self.automorphism.power(-k, invert(w)), -k)

    def label(self, element):
        word, k = element
        if k == 0:
            return format_word(word)
        prefix = "" if not word else format_word(word) + "*"
        return "%st^%d" % (prefix, k)

    def parse(self, label):
        if "t^" not in label:
            return (parse_word(label, self.rank), 0)
        head, _, power = label.rpartition("t^")
        head = head.rstrip("*")
        return (parse_word(head, self.rank), int(power))

    def __str__(self):
        return "fbc:%d:%s" % (self.rank, self.automorphism)


class TilingModel(object):
    kind = ModelKind.SURFACE_TILING

    def __init__(self, p, q):
        if (p - 2) * (q - 2) <= 4:
            raise NotHyperbolicTiling(p, q)
        self.p = p
        self.q = q

    def __str__(self):
        return "tiling:%d:%d" % (self.p, self.q)


def parse_model(spec):
    """Parse ``free:2``, ``fbc:2:a->ab,b->a`` or ``tiling:7:3``."""
    parts = spec.strip().split(":", 2)
    try:
        if parts[0] == ModelKind.FREE.tag and len(parts) == 2:
            return FreeModel(int(parts[1]))

        if parts[0] == ModelKind.FREE_BY_CYCLIC.tag and len(parts) == 3:
            rank = int(parts[1])
            return FreeByCyclicModel(rank, parse_automorphism(parts[2], rank))

        if parts[0] == ModelKind.SURFACE_TILING.tag and len(parts) == 3:
            return TilingModel(int(parts[1]), int(parts[2]))

    except ValueError:
        pass

    raise UnknownModel(spec)


def is_model_spec(text):
    return text.split(":", 1)[0] in [kind.tag for kind in ModelKind]
