# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
# flake8: noqa
from __future__ import absolute_import
from __future__ import unicode_literals

from .cli import CTMapHelpCommand
from .cli import CTMapHelpGroup
from .cli import parse_budgets
from .cli import split_list
from .report import csv_text
from .report import file_digest
from .report import mapping_digest
from .report import text_digest
from .report import write_text
from .text import format_witness
from .text import pretty_columns
from .threading import ErrorPropagatingThread
from .threading import run_all
