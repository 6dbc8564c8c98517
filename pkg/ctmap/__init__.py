# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from pkg_resources import DistributionNotFound
from pkg_resources import get_distribution


__package__ = 'ctmap-tools'
__program__ = 'ctmap'
__version__ = 'unset'
__description__ = '''
Build trees of hyperbolic graphs, construct ladders and audit the constants
behind Cannon-Thurston maps on finite models.
'''
__all__ = [
    'ctmap'
]

try:
    __version__ = get_distribution(__package__).version
except DistributionNotFound:
    pass  # package is not installed
