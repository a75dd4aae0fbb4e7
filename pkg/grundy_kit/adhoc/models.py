# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Pydantic models for scenarios and topology events, plus the simulator state types.
"""

from dataclasses import dataclass, field
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union
import logging

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, field_validator, model_validator

logger = logging.getLogger(__name__)

RuleName = Literal["strict_mex", "conflict_only"]


class NodeRecord(BaseModel):
    """An emitter: id, position in meters and its current channel"""
    model_config = ConfigDict(frozen=True)

    id: int
    x: FiniteFloat
    y: FiniteFloat
    channel: int = Field(ge=1, description="Frequency index; arbitrary before convergence but always >= 1")


class JoinAction(BaseModel):
    type: Literal["join"]
    id: int
    x: FiniteFloat
    y: FiniteFloat
    channel: int = Field(default=1, ge=1)


class LeaveAction(BaseModel):
    type: Literal["leave"]
    id: int


class MoveAction(BaseModel):
    type: Literal["move"]
    id: int
    x: FiniteFloat
    y: FiniteFloat


class SetRangeAction(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    type: Literal["set_range"]
    radio_range: float = Field(alias="range", ge=0, allow_inf_nan=False)


class CorruptAction(BaseModel):
    type: Literal["corrupt"]
    seed: Optional[int] = Field(default=None, description="Falls back to the scenario seed")


Action = Annotated[
    Union[JoinAction, LeaveAction, MoveAction, SetRangeAction, CorruptAction],
    Field(discriminator="type"),
]


class TopologyEvent(BaseModel):
    """A topology change applied when the network reaches at_round"""
    model_config = ConfigDict(populate_by_name=True)

    at_round: int = Field(alias="round", ge=0)
    action: Action


class Scenario(BaseModel):
    """
    A complete simulation input, as read from scenario JSON.

    Events are checked against the evolving id set before anything runs:
    join ids must be fresh, leave and move ids present.
    """
    model_config = ConfigDict(populate_by_name=True)

    radio_range: float = Field(alias="range", ge=0, allow_inf_nan=False, description="Interference radius in meters (closed ball)")
    rule: RuleName = Field(default="strict_mex")
    max_rounds: int = Field(default=500, ge=1, description="Round budget after the last event")
    seed: int = Field(default=0)
    nodes: List[NodeRecord] = Field(default_factory=list)
    events: List[TopologyEvent] = Field(default_factory=list)

    @field_validator('nodes')
    @classmethod
    def validate_unique_ids(cls, v):
        seen = set()
        for node in v:
            if node.id in seen:
                raise ValueError(f"duplicate node id {node.id}")
            seen.add(node.id)
        return v

    @field_validator('events')
    @classmethod
    def validate_event_order(cls, v):
        rounds = [event.at_round for event in v]
        if rounds != sorted(rounds):
            raise ValueError("events must be sorted by round")
        return v

    @model_validator(mode='after')
    def validate_event_ids(self):
        present = {node.id for node in self.nodes}
        for index, event in enumerate(self.events):
            action = event.action
            if isinstance(action, JoinAction):
                if action.id in present:
                    raise ValueError(f"event {index}: join id {action.id} is already present")
                present.add(action.id)
            elif isinstance(action, (LeaveAction, MoveAction)):
                if action.id not in present:
                    raise ValueError(f"event {index}: {action.type} id {action.id} is not present")
                if isinstance(action, LeaveAction):
                    present.discard(action.id)
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude_none=True)


@dataclass(frozen=True)
class NetworkState:
    """Nodes sorted by id; vertex i of the interference graph is nodes[i]"""
    nodes: Tuple[NodeRecord, ...]
    radio_range: float
    round: int = 0

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=lambda node: node.id)))

    @classmethod
    def from_scenario(cls, scenario: Scenario) -> "NetworkState":
        return cls(nodes=tuple(scenario.nodes), radio_range=scenario.radio_range)

    @property
    def ids(self) -> List[int]:
        return [node.id for node in self.nodes]

    @property
    def channels(self) -> List[int]:
        return [node.channel for node in self.nodes]

    def index_of(self, node_id: int) -> Optional[int]:
        for i, node in enumerate(self.nodes):
            if node.id == node_id:
                return i
        return None

    def with_channels(self, channels: List[int]) -> "NetworkState":
        nodes = tuple(node.model_copy(update={"channel": int(c)}) for node, c in zip(self.nodes, channels))
        return NetworkState(nodes=nodes, radio_range=self.radio_range, round=self.round)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "range": self.radio_range,
            "round": self.round,
            "nodes": [node.model_dump() for node in self.nodes],
        }


@dataclass
class RoundMetrics:
    """Telemetry of one synchronous round, taken from the pre-round snapshot"""
    round: int
    moves: int
    conflicts: int
    messages: int
    colors_in_use: int
    stable: bool
    # vertex indices (sorted-id positions) that recolored this round
    movers: List[int] = field(default_factory=list)

    CSV_FIELDS = ("round", "moves", "conflicts", "messages", "colors_in_use", "stable")

    def to_row(self) -> List[Any]:
        return [self.round, self.moves, self.conflicts, self.messages, self.colors_in_use, str(self.stable).lower()]

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.CSV_FIELDS}
