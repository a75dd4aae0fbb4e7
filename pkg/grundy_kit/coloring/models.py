# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Coloring value types and verification reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from numbers import Integral
from typing import Any, Dict, List, Optional, Tuple
import logging

from ..errors import InvalidInputError, MalformedColoringError

logger = logging.getLogger(__name__)


class ColoringKind(Enum):
    """Coloring conditions; proper is minimized, the other kinds are maximized"""
    PROPER = "proper"
    GRUNDY = "grundy"
    PARTIAL_GRUNDY = "partial_grundy"
    B_COLORING = "b_coloring"

    @classmethod
    def parse(cls, value: str) -> "ColoringKind":
        try:
            return cls(value)
        except ValueError:
            raise InvalidInputError(
                f"unknown coloring kind '{value}', expected one of: {', '.join(k.value for k in cls)}"
            )

    @property
    def requires_gap_free(self) -> bool:
        return self is not ColoringKind.PROPER


@dataclass(frozen=True)
class Coloring:
    """1-based color per vertex; k is the largest color used"""
    colors: Tuple[int, ...]

    def __post_init__(self):
        for v, c in enumerate(self.colors):
            if not isinstance(c, Integral) or isinstance(c, bool) or c < 1:
                raise MalformedColoringError(f"vertex {v} has color {c!r}; colors are integers >= 1")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    def color_classes(self) -> List[List[int]]:
        """Vertices of color i at index i-1 (empty lists for unused colors)"""
        classes: List[List[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c - 1].append(v)
        return classes

    def used_colors(self) -> List[int]:
        return sorted(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class VertexOrder:
    """Visiting order for greedy coloring; must be a permutation of 0..n-1"""
    order: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise InvalidInputError(f"vertex order is not a permutation of 0..{len(self.order) - 1}")

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


@dataclass
class Counterexample:
    """Why a coloring failed: a monochromatic edge, or a vertex/class missing a color"""
    edge: Optional[Tuple[int, int]] = None
    vertex: Optional[int] = None
    color_class: Optional[int] = None
    missing_color: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        if self.edge is not None:
            return {"edge": list(self.edge)}
        data: Dict[str, Any] = {"missing_color": self.missing_color}
        if self.vertex is not None:
            data["vertex"] = self.vertex
        if self.color_class is not None:
            data["class"] = self.color_class
        return data


@dataclass
class WitnessReport:
    """Outcome of verifying a coloring against a kind"""
    valid: bool
    kind: ColoringKind
    k: int
    witnesses: List[List[int]] = field(default_factory=list)
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        """Validate report consistency"""
        if self.valid and self.counterexample is not None:
            logger.warning("Valid report carries a counterexample")
        if not self.valid and self.counterexample is None:
            logger.warning("Invalid report without counterexample")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "kind": self.kind.value,
            "k": self.k,
            "witnesses": self.witnesses,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }


@dataclass
class BoundsReport:
    """Cheap bounds on the coloring parameters of a graph"""
    max_degree_plus_one: int
    clique_lower: int
    m_degree: int
    second_degree_plus_one: int
    partial_grundy_upper: int
    clique: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_degree_plus_one": self.max_degree_plus_one,
            "clique_lower": self.clique_lower,
            "m_degree": self.m_degree,
            "second_degree_plus_one": self.second_degree_plus_one,
            "partial_grundy_upper": self.partial_grundy_upper,
            "clique": self.clique,
        }
