# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Base class for graph text formats.
All graph formats should inherit from this class.
"""

from abc import ABC, abstractmethod
from typing import Iterator, List, Optional, Sequence, Tuple
import logging

from ..errors import InvalidInputError
from ..graph import Graph

logger = logging.getLogger(__name__)


class BaseGraphFormat(ABC):
    """
    Abstract base class for graph formats.

    A format always serializes; formats that can be read back also
    override parse() and report it through is_parseable().
    """

    @abstractmethod
    def get_format_name(self) -> str:
        """Return the format name this class handles"""
        pass

    @abstractmethod
    def serialize(self, g: Graph, colors: Optional[Sequence[int]] = None) -> str:
        """
        Render a graph as text.

        Args:
            g: Graph to render
            colors: Optional per-vertex colors (only used by formats that can show them)

        Returns:
            Text in this format, newline terminated
        """
        pass

    def parse(self, text: str) -> Graph:
        """
        Read a graph from text in this format.

        Raises:
            InvalidInputError: malformed line, out-of-range vertex or self-loop (with line number)
        """
        raise InvalidInputError(f"format '{self.get_format_name()}' is write-only")

    def is_parseable(self) -> bool:
        return type(self).parse is not BaseGraphFormat.parse

    @staticmethod
    def meaningful_lines(text: str, comment_prefix: str) -> Iterator[Tuple[int, List[str]]]:
        """Yield (line number, tokens) for non-empty, non-comment lines"""
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(comment_prefix):
                continue
            yield number, line.split()

    @staticmethod
    def parse_int(token: str, line: int, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise InvalidInputError(f"{what} must be an integer, got '{token}'", line=line)

    @staticmethod
    def build(vertex_count: int, edges: List[Tuple[int, int, int]]) -> Graph:
        """Validate (u, v, line) triples and build the graph; duplicates are merged."""
        for u, v, line in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for {vertex_count} vertices", line=line)
            if u == v:
                raise InvalidInputError(f"self-loop on vertex {u}", line=line)
        g = Graph.from_edges(vertex_count, ((u, v) for u, v, _ in edges))
        if g.edge_count < len(edges):
            logger.debug(f"🔧 Merged {len(edges) - g.edge_count} duplicate edges")
        return g
