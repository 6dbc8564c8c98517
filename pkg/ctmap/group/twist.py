# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction
from functools import reduce
from operator import mul

import numpy as np

from ctmap.error import EntryOverflow
from ctmap.error import InvalidCoefficient
from ctmap.error import InvalidSpecification

UPPER = "upper"
LOWER = "lower"

# entries must fit a signed 64-bit integer unless big integers are requested
ENTRY_BITS = 63


def upper(n):
    return np.array([[1, n], [0, 1]], dtype=object)


def lower(n):
    return np.array([[1, 0], [n, 1]], dtype=object)


class TwistSequence(namedtuple('_TwistSequence', ['a', 'product', 'first'])):
    @property
    def determinant(self):
        m = self.product
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]

    @property
    def max_entry(self):
        return max(abs(int(x)) for x in self.product.flat)

    def as_lists(self):
        return [[int(x) for x in row] for row in self.product]


def _shapes(first):
    if first == UPPER:
        return upper, lower
    if first == LOWER:
        return lower, upper
    raise InvalidSpecification("First twist must be upper or lower, got %s" % first)


def dehn_twist_product(a, first=LOWER, big=False):
    """
    ``Phi_1 Phi_2 ... Phi_n`` with the factors alternating between the
    lower and upper triangular twist shapes, starting with ``first``.  The
    default puts lower factors at odd indices, so they twist along ``b``.
    """
    a = [int(x) for x in a]
    for i, x in enumerate(a, start=1):
        if x < 2:
            raise InvalidCoefficient(i, x)

    odd, even = _shapes(first)
    product = np.identity(2, dtype=object)
    for i, x in enumerate(a, start=1):
        product = product.dot(odd(x) if i % 2 else even(x))

        if not big:
            bits = max(abs(int(v)).bit_length() for v in product.flat)
            if bits > ENTRY_BITS:
                raise EntryOverflow(bits)

    return TwistSequence(tuple(a), product, first)


TwistBounds = namedtuple('TwistBounds', ['lower', 'proxy', 'upper', 'passed'])


def twist_bounds_check(a, first=LOWER, big=False):
    """
    ``prod a(i) <= L <= prod (a(i) + 2)`` with ``L`` the largest absolute
    entry of the twist product.
    """
    sequence = dehn_twist_product(a, first=first, big=big)
    low = reduce(mul, sequence.a, 1)
    high = reduce(mul, [x + 2 for x in sequence.a], 1)
    proxy = sequence.max_entry
    return TwistBounds(low, proxy, high, low <= proxy <= high)


def rho_curve(a, first=LOWER, big=False):
    """
    Homology class of ``Phi_1 ... Phi_n (gamma_n)`` where ``gamma_n`` is the
    curve ``a = (1, 0)`` for even ``n`` and ``b = (0, 1)`` for odd ``n``.
    """
    sequence = dehn_twist_product(a, first=first, big=big)
    gamma = (1, 0) if len(sequence.a) % 2 == 0 else (0, 1)
    m = sequence.product
    return (
        int(m[0, 0] * gamma[0] + m[0, 1] * gamma[1]),
        int(m[1, 0] * gamma[0] + m[1, 1] * gamma[1]),
    )


def distortion_window(a):
    """Exact bounds on ``disto(2n + 1)`` implied by the twist bounds."""
    a = [int(x) for x in a]
    R = 2 * len(a) + 1
    low = reduce(mul, a, 1)
    high = reduce(mul, [x + 2 for x in a], 1)
    return Fraction(low, R), Fraction(high, R)
