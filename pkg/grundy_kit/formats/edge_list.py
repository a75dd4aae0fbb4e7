# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Edge list format: vertex count on the first line, then one "u v" pair per line.
"""

from typing import Optional, Sequence

from ..errors import InvalidInputError
from ..graph import Graph
from .base_format import BaseGraphFormat


class EdgeListFormat(BaseGraphFormat):
    """0-indexed edge list with a vertex-count header; '#' starts a comment line"""

    def get_format_name(self) -> str:
        return "edge_list"

    def parse(self, text: str) -> Graph:
        vertex_count = None
        edges = []
        for number, tokens in self.meaningful_lines(text, "#"):
            if vertex_count is None:
                if len(tokens) != 1:
                    raise InvalidInputError("expected the vertex count alone on the first line", line=number)
                vertex_count = self.parse_int(tokens[0], number, "vertex count")
                if vertex_count < 0:
                    raise InvalidInputError("vertex count must be non-negative", line=number)
                continue
            if len(tokens) != 2:
                raise InvalidInputError(f"expected 'u v', got {len(tokens)} fields", line=number)
            u = self.parse_int(tokens[0], number, "vertex")
            v = self.parse_int(tokens[1], number, "vertex")
            edges.append((u, v, number))
        if vertex_count is None:
            raise InvalidInputError("missing vertex count header")
        return self.build(vertex_count, edges)

    def serialize(self, g: Graph, colors: Optional[Sequence[int]] = None) -> str:
        lines = [str(g.vertex_count)]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
