# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
DIMACS .col format ("p edge n m" header, 1-indexed "e u v" lines).
"""

from typing import Optional, Sequence
import logging

from ..errors import InvalidInputError
from ..graph import Graph
from .base_format import BaseGraphFormat

logger = logging.getLogger(__name__)


class DimacsFormat(BaseGraphFormat):
    """DIMACS graph coloring instances; vertices are shifted to 0-indexed on read"""

    def get_format_name(self) -> str:
        return "dimacs"

    def parse(self, text: str) -> Graph:
        vertex_count = None
        declared_edges = None
        edges = []
        for number, tokens in self.meaningful_lines(text, "c"):
            tag = tokens[0]
            if tag == "p":
                if vertex_count is not None:
                    raise InvalidInputError("duplicate problem line", line=number)
                if len(tokens) != 4:
                    raise InvalidInputError("expected 'p edge <n> <m>'", line=number)
                if tokens[1] != "edge":
                    raise InvalidInputError(f"unsupported problem type '{tokens[1]}', expected 'edge'", line=number)
                vertex_count = self.parse_int(tokens[2], number, "vertex count")
                declared_edges = self.parse_int(tokens[3], number, "edge count")
                if vertex_count < 0 or declared_edges < 0:
                    raise InvalidInputError("vertex and edge counts must be non-negative", line=number)
            elif tag == "e":
                if vertex_count is None:
                    raise InvalidInputError("edge line before problem line", line=number)
                if len(tokens) != 3:
                    raise InvalidInputError("expected 'e <u> <v>'", line=number)
                u = self.parse_int(tokens[1], number, "vertex") - 1
                v = self.parse_int(tokens[2], number, "vertex") - 1
                edges.append((u, v, number))
            else:
                raise InvalidInputError(f"unknown line type '{tag}'", line=number)
        if vertex_count is None:
            raise InvalidInputError("missing 'p edge' problem line")
        g = self.build(vertex_count, edges)
        if declared_edges != len(edges):
            logger.warning(f"⚠️  DIMACS header declares {declared_edges} edges, found {len(edges)} edge lines")
        return g

    def serialize(self, g: Graph, colors: Optional[Sequence[int]] = None) -> str:
        lines = [f"p edge {g.vertex_count} {g.edge_count}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
