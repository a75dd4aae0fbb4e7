# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Graph text formats.
Supports edge lists, DIMACS .col and DOT export.
"""

from .base_format import BaseGraphFormat
from .format_factory import FormatFactory, parse_graph, serialize_graph
from .edge_list import EdgeListFormat
from .dimacs import DimacsFormat
from .dot import DotFormat

FormatFactory.register_format("edge_list", EdgeListFormat)
FormatFactory.register_format("dimacs", DimacsFormat)
FormatFactory.register_format("dot", DotFormat)

__all__ = [
    'BaseGraphFormat',
    'FormatFactory',
    'parse_graph',
    'serialize_graph',
    'EdgeListFormat',
    'DimacsFormat',
    'DotFormat',
]
