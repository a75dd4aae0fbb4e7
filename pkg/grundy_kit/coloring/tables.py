# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Parameter tables for products of two simple families (path x path, path x cycle, ...).
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence
import logging

from ..errors import InvalidInputError
from ..graph import family, get_operator
from .models import ColoringKind
from .solver import default_limit, exact_parameter

logger = logging.getLogger(__name__)

TABLE_FAMILIES = ("path", "cycle", "complete", "star", "empty")


@dataclass
class TableEntry:
    left_size: int
    right_size: int
    vertex_count: int
    value: Optional[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.left_size,
            "n": self.right_size,
            "vertices": self.vertex_count,
            "value": self.value,
        }


def _smallest_size(name: str) -> int:
    return 3 if name == "cycle" else 1


def parameter_table(
    operator: str,
    left_family: str,
    right_family: str,
    sizes: Sequence[int],
    kind: ColoringKind = ColoringKind.GRUNDY,
    limit: Optional[int] = None,
) -> List[TableEntry]:
    """
    Exact parameter of left(m) op right(n) for every m, n in sizes.

    Sizes too small for a family are skipped; products above the solver
    limit are kept with value None.
    """
    for name in (left_family, right_family):
        if name not in TABLE_FAMILIES:
            raise InvalidInputError(f"table family must be one of: {', '.join(TABLE_FAMILIES)}, got '{name}'")
    combine = get_operator(operator)
    if limit is None:
        limit = default_limit(kind)

    entries: List[TableEntry] = []
    for m in sizes:
        if m < _smallest_size(left_family):
            continue
        for n in sizes:
            if n < _smallest_size(right_family):
                continue
            g = combine(family(left_family, m), family(right_family, n))
            value = None
            if g.vertex_count <= limit:
                value, _ = exact_parameter(g, kind, limit=limit)
            else:
                logger.info(f"⚠️  Skipping {left_family}({m}) {operator} {right_family}({n}): {g.vertex_count} vertices > {limit}")
            entries.append(TableEntry(m, n, g.vertex_count, value))
    return entries
