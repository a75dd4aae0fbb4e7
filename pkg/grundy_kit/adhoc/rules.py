# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Local recoloring rules for the self-stabilizing simulator.

A rule decides from a node's own channel and its neighbors' channels
whether the node is unstable. Every unstable node that moves adopts the
mex of its neighbors' channels.
"""

from abc import ABC, abstractmethod
from typing import Collection, Dict, List
import logging

from ..coloring import ColoringKind, mex
from ..errors import InvalidInputError

logger = logging.getLogger(__name__)


class BaseRecoloringRule(ABC):
    """Abstract base class for recoloring rules"""

    # Coloring kind that stable states of this rule satisfy
    fixpoint_kind: ColoringKind = ColoringKind.PROPER

    @abstractmethod
    def get_rule_name(self) -> str:
        pass

    @abstractmethod
    def is_unstable(self, channel: int, neighbor_channels: Collection[int]) -> bool:
        pass

    def target(self, neighbor_channels: Collection[int]) -> int:
        return mex(neighbor_channels)


class StrictMexRule(BaseRecoloringRule):
    """Unstable unless the channel equals the mex of the neighborhood; fixpoints are Grundy colorings"""

    fixpoint_kind = ColoringKind.GRUNDY

    def get_rule_name(self) -> str:
        return "strict_mex"

    def is_unstable(self, channel: int, neighbor_channels: Collection[int]) -> bool:
        return channel != mex(neighbor_channels)


class ConflictOnlyRule(BaseRecoloringRule):
    """Unstable only when a neighbor shares the channel; fixpoints are proper colorings"""

    fixpoint_kind = ColoringKind.PROPER

    def get_rule_name(self) -> str:
        return "conflict_only"

    def is_unstable(self, channel: int, neighbor_channels: Collection[int]) -> bool:
        return channel in neighbor_channels


_RULES: Dict[str, type] = {
    "strict_mex": StrictMexRule,
    "conflict_only": ConflictOnlyRule,
}


def get_rule(name: str) -> BaseRecoloringRule:
    rule_class = _RULES.get(name)
    if rule_class is None:
        raise InvalidInputError(f"unknown rule '{name}', expected one of: {', '.join(_RULES)}")
    return rule_class()


def get_supported_rules() -> List[str]:
    return list(_RULES.keys())
