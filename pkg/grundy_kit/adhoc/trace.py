# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Per-round trace output as CSV.
"""

import csv
import io
from typing import Sequence

from .models import RoundMetrics


def trace_to_csv(trace: Sequence[RoundMetrics]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RoundMetrics.CSV_FIELDS)
    for metrics in trace:
        writer.writerow(metrics.to_row())
    return buffer.getvalue()
