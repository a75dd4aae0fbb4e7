# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Witness verification for the four coloring kinds.

verify() never raises on an invalid coloring; it returns a WitnessReport
with a counterexample. It raises MalformedColoringError only when the
coloring cannot be checked at all.
"""

from typing import List, Optional, Sequence, Union
import logging

from ..errors import MalformedColoringError
from ..graph import Graph
from .models import Coloring, ColoringKind, Counterexample, WitnessReport

logger = logging.getLogger(__name__)


def _missing_below(g: Graph, colors: Sequence[int], v: int, ceiling: int, skip: int = 0) -> Optional[int]:
    """Smallest color in 1..ceiling (other than skip) absent from the neighborhood of v."""
    seen = {colors[u] for u in g.neighbors(v)}
    for j in range(1, ceiling + 1):
        if j != skip and j not in seen:
            return j
    return None


def _conflict(g: Graph, colors: Sequence[int]) -> Optional[Counterexample]:
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Counterexample(edge=(u, v))
    return None


def _gap(colors: Sequence[int], k: int) -> Optional[Counterexample]:
    used = set(colors)
    for j in range(1, k + 1):
        if j not in used:
            return Counterexample(color_class=j, missing_color=j)
    return None


def _class_witnesses(
    g: Graph, coloring: Coloring, kind: ColoringKind
) -> Union[List[List[int]], Counterexample]:
    """Per-class witness vertices, or the counterexample of the first class without one."""
    colors = coloring.colors
    k = coloring.k
    witnesses: List[List[int]] = []
    for i, members in enumerate(coloring.color_classes(), start=1):
        if kind is ColoringKind.B_COLORING:
            ceiling, skip = k, i
        else:
            ceiling, skip = i - 1, 0
        found = [v for v in members if _missing_below(g, colors, v, ceiling, skip) is None]
        if kind is ColoringKind.GRUNDY and len(found) != len(members):
            bad = next(v for v in members if v not in found)
            return Counterexample(vertex=bad, missing_color=_missing_below(g, colors, bad, ceiling))
        if not found:
            first = members[0]
            return Counterexample(color_class=i, missing_color=_missing_below(g, colors, first, ceiling, skip))
        witnesses.append(found)
    return witnesses


def verify(g: Graph, c: Union[Coloring, Sequence[int]], kind: ColoringKind) -> WitnessReport:
    """
    Check a coloring against a kind.

    proper: no monochromatic edge.
    grundy: proper, every vertex colored i sees every color below i.
    partial_grundy: proper, every class i has a vertex seeing every color below i.
    b_coloring: proper, every class has a vertex seeing every other class.
    All kinds but proper also require colors to be exactly 1..k.
    """
    coloring = c if isinstance(c, Coloring) else Coloring(tuple(c))
    if coloring.vertex_count != g.vertex_count:
        raise MalformedColoringError(
            f"coloring covers {coloring.vertex_count} vertices, graph has {g.vertex_count}"
        )
    k = coloring.k

    counterexample = _conflict(g, coloring.colors)
    if counterexample is None and kind.requires_gap_free:
        counterexample = _gap(coloring.colors, k)
    if counterexample is not None:
        logger.debug(f"🔧 {kind.value} check failed: {counterexample.to_dict()}")
        return WitnessReport(valid=False, kind=kind, k=k, counterexample=counterexample)

    if kind is ColoringKind.PROPER:
        return WitnessReport(valid=True, kind=kind, k=k)

    outcome = _class_witnesses(g, coloring, kind)
    if isinstance(outcome, Counterexample):
        logger.debug(f"🔧 {kind.value} check failed: {outcome.to_dict()}")
        return WitnessReport(valid=False, kind=kind, k=k, counterexample=outcome)
    return WitnessReport(valid=True, kind=kind, k=k, witnesses=outcome)
