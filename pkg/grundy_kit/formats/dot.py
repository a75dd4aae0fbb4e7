# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Graphviz DOT export (write-only).
"""

from typing import Optional, Sequence

from ..graph import Graph
from .base_format import BaseGraphFormat


class DotFormat(BaseGraphFormat):
    """Undirected DOT; colored vertices get a fill color cycling over PALETTE"""

    PALETTE = (
        "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
        "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    )

    def get_format_name(self) -> str:
        return "dot"

    def fill_color(self, color: int) -> str:
        return self.PALETTE[(color - 1) % len(self.PALETTE)]

    def serialize(self, g: Graph, colors: Optional[Sequence[int]] = None) -> str:
        lines = ["graph G {"]
        for v in g.vertices:
            if colors is None:
                lines.append(f'  {v} [label="{v}"];')
            else:
                lines.append(
                    f'  {v} [label="{v}", style=filled, fillcolor="{self.fill_color(colors[v])}"];'
                )
        lines.extend(f"  {u} -- {v};" for u, v in g.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
