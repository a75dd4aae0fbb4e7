# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Format factory for creating and managing graph formats.
"""

from typing import Dict, Optional, Sequence
import logging

from ..errors import InvalidInputError
from ..graph import Graph
from .base_format import BaseGraphFormat

logger = logging.getLogger(__name__)


class FormatFactory:
    """Factory for creating and managing graph formats"""

    _formats: Dict[str, BaseGraphFormat] = {}
    _format_classes: Dict[str, type] = {}

    @classmethod
    def register_format(cls, format_name: str, format_class: type):
        """
        Register a format class.

        Args:
            format_name: Format identifier (edge_list, dimacs, dot)
            format_class: BaseGraphFormat subclass to register
        """
        cls._format_classes[format_name] = format_class
        logger.debug(f"Registered graph format: {format_name}")

    @classmethod
    def get_format(cls, format_name: str) -> BaseGraphFormat:
        """
        Get or create the handler for a format.

        Raises:
            InvalidInputError: no format registered under that name
        """
        if format_name not in cls._formats:
            format_class = cls._format_classes.get(format_name)
            if format_class is None:
                raise InvalidInputError(
                    f"unknown format '{format_name}', expected one of: {', '.join(cls.get_supported_formats())}"
                )
            cls._formats[format_name] = format_class()
        return cls._formats[format_name]

    @classmethod
    def get_supported_formats(cls) -> list:
        return list(cls._format_classes.keys())

    @classmethod
    def get_parseable_formats(cls) -> list:
        return [name for name in cls._format_classes if cls.get_format(name).is_parseable()]


# Convenience functions for direct use

def parse_graph(format_name: str, text: str) -> Graph:
    """Parse graph text in the named format"""
    return FormatFactory.get_format(format_name).parse(text)


def serialize_graph(format_name: str, g: Graph, colors: Optional[Sequence[int]] = None) -> str:
    """Serialize a graph (optionally with per-vertex colors) in the named format"""
    return FormatFactory.get_format(format_name).serialize(g, colors)
