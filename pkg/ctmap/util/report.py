# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import csv
import hashlib
import io
import json
import os


def csv_text(header, rows):
    """CSV with ``\\n`` line endings so reports compare byte for byte."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if header:
        writer.writerow(header)
    for row in rows:
        writer.writerow([str(cell) for cell in row])
    return out.getvalue()


def write_text(path, text):
    dirname = os.path.dirname(path)
    if dirname and not os.path.isdir(dirname):
        os.makedirs(dirname)
    with io.open(path, 'w', encoding='utf-8', newline='') as fh:
        fh.write(text)


def text_digest(text):
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def file_digest(path):
    h = hashlib.sha256()
    with open(path, 'rb') as fh:
        for chunk in iter(lambda: fh.read(65536), b''):
            h.update(chunk)
    return h.hexdigest()


def mapping_digest(data):
    """Digest of a JSON-able mapping, independent of key order."""
    return text_digest(json.dumps(data, sort_keys=True, default=str))
