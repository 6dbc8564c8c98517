# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import unittest  # noqa

try:
    from unittest import mock  # noqa
except ImportError:
    import mock  # noqa
