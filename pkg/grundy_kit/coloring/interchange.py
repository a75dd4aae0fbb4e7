# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Coloring interchange: "vertex color" lines and the JSON form.
"""

import json
from typing import Any, Dict, Optional

from ..errors import InvalidInputError, MalformedColoringError
from .models import Coloring, ColoringKind, WitnessReport


def parse_coloring(text: str) -> Coloring:
    """
    Read a coloring from either format.

    JSON input is an object with a "colors" (or "certificate") list; anything
    else is read as "vertex color" lines, '#' starting a comment line.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"coloring JSON is not valid: {e}")
        colors = data.get("colors", data.get("certificate"))
        if not isinstance(colors, list):
            raise MalformedColoringError("coloring JSON needs a 'colors' or 'certificate' list")
        return Coloring(tuple(colors))

    assigned: Dict[int, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidInputError(f"expected 'vertex color', got {len(tokens)} fields", line=number)
        try:
            vertex, color = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InvalidInputError("vertex and color must be integers", line=number)
        if vertex in assigned:
            raise MalformedColoringError(f"vertex {vertex} colored twice", line=number)
        assigned[vertex] = color
    if sorted(assigned) != list(range(len(assigned))):
        raise MalformedColoringError("coloring must cover vertices 0..n-1 exactly once")
    return Coloring(tuple(assigned[v] for v in range(len(assigned))))


def coloring_to_lines(c: Coloring) -> str:
    return "".join(f"{v} {color}\n" for v, color in enumerate(c.colors))


def coloring_to_json(c: Coloring, kind: Optional[ColoringKind] = None, report: Optional[WitnessReport] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {"k": c.k, "colors": list(c.colors)}
    if kind is not None:
        data["kind"] = kind.value
    if report is not None:
        data["valid"] = report.valid
    return data
