# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Round-based simulator for self-stabilizing frequency assignment.

Each round reads a snapshot of all channels. Among the unstable nodes,
exactly those without an unstable neighbor of smaller id move, so two
adjacent nodes never recolor in the same round.
"""

from dataclasses import dataclass, field
from itertools import groupby
from typing import Any, Dict, List, Optional, Tuple, Union
import logging

import numpy as np

from ..coloring import Coloring, ColoringKind, WitnessReport, verify
from ..errors import InvalidInputError
from .interference import interference_graph
from .models import (
    CorruptAction,
    JoinAction,
    LeaveAction,
    MoveAction,
    NetworkState,
    NodeRecord,
    RoundMetrics,
    Scenario,
    SetRangeAction,
    TopologyEvent,
)
from .rules import BaseRecoloringRule, get_rule

logger = logging.getLogger(__name__)


@dataclass
class Reconvergence:
    """Rounds needed to become stable again after the events of one round"""
    event_round: int
    # None when another event interrupted, or the budget ran out first
    rounds: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"round": self.event_round, "rounds_to_stable": self.rounds}


@dataclass
class RunResult:
    trace: List[RoundMetrics]
    final: NetworkState
    converged: bool
    fixpoint_report: Optional[WitnessReport] = None
    partial_grundy_report: Optional[WitnessReport] = None
    reconvergence: List[Reconvergence] = field(default_factory=list)

    def __post_init__(self):
        if not self.converged:
            logger.warning(f"⚠️  Simulation did not converge after {len(self.trace)} rounds")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "converged": self.converged,
            "rounds": len(self.trace),
            "final": self.final.to_dict(),
            "fixpoint": self.fixpoint_report.to_dict() if self.fixpoint_report else None,
            "partial_grundy": self.partial_grundy_report.to_dict() if self.partial_grundy_report else None,
            "reconvergence": [r.to_dict() for r in self.reconvergence],
        }


def _resolve_rule(rule: Union[str, BaseRecoloringRule]) -> BaseRecoloringRule:
    return get_rule(rule) if isinstance(rule, str) else rule


def step(state: NetworkState, rule: Union[str, BaseRecoloringRule]) -> Tuple[NetworkState, RoundMetrics]:
    """One synchronous round; metrics describe the snapshot the round started from."""
    rule = _resolve_rule(rule)
    g = interference_graph(state)
    snapshot = state.channels

    neighborhoods = [[snapshot[u] for u in g.neighbors(v)] for v in g.vertices]
    unstable = [rule.is_unstable(snapshot[v], neighborhoods[v]) for v in g.vertices]
    # sorted-id order makes index order equal id order
    movers = [
        v for v in g.vertices
        if unstable[v] and not any(unstable[u] for u in g.neighbors(v) if u < v)
    ]

    channels = list(snapshot)
    for v in movers:
        channels[v] = rule.target(neighborhoods[v])

    metrics = RoundMetrics(
        round=state.round + 1,
        moves=len(movers),
        conflicts=sum(1 for u, v in g.edges() if snapshot[u] == snapshot[v]),
        messages=2 * g.edge_count,
        colors_in_use=len(set(snapshot)),
        stable=not movers,
        movers=movers,
    )
    logger.debug(f"🔄 Round {metrics.round}: {metrics.moves} moves, {metrics.conflicts} conflicts")

    next_state = state.with_channels(channels)
    return NetworkState(nodes=next_state.nodes, radio_range=state.radio_range, round=state.round + 1), metrics


def corrupt_channels(state: NetworkState, seed: int) -> NetworkState:
    """Every channel redrawn uniformly in 1..max_degree+2 from seed."""
    if not state.nodes:
        return state
    ceiling = interference_graph(state).max_degree + 2
    rng = np.random.default_rng(seed)
    channels = rng.integers(1, ceiling, size=len(state.nodes), endpoint=True)
    return state.with_channels(channels.tolist())


def apply_event(state: NetworkState, event: TopologyEvent, default_seed: int = 0) -> NetworkState:
    """
    Apply one topology change; channels of surviving nodes are untouched.

    Args:
        state: Current network
        event: Change to apply (its round is not checked here)
        default_seed: Seed for corrupt actions that carry none

    Raises:
        InvalidInputError: join of a present id, leave/move of a missing id
    """
    action = event.action
    nodes = list(state.nodes)
    radio_range = state.radio_range

    if isinstance(action, CorruptAction):
        seed = default_seed if action.seed is None else action.seed
        logger.debug(f"🔧 Corrupting all channels with seed {seed}")
        return corrupt_channels(state, seed)

    if isinstance(action, SetRangeAction):
        radio_range = action.radio_range
    elif isinstance(action, JoinAction):
        if state.index_of(action.id) is not None:
            raise InvalidInputError(f"join: node {action.id} is already in the network")
        nodes.append(NodeRecord(id=action.id, x=action.x, y=action.y, channel=action.channel))
    elif isinstance(action, (LeaveAction, MoveAction)):
        index = state.index_of(action.id)
        if index is None:
            raise InvalidInputError(f"{action.type}: node {action.id} is not in the network")
        if isinstance(action, LeaveAction):
            del nodes[index]
        else:
            nodes[index] = nodes[index].model_copy(update={"x": action.x, "y": action.y})
    logger.debug(f"🔧 Applied {action.type} at round {state.round}")
    return NetworkState(nodes=tuple(nodes), radio_range=radio_range, round=state.round)


def fixpoint_reports(state: NetworkState, kind: ColoringKind) -> Tuple[Optional[WitnessReport], Optional[WitnessReport]]:
    """Verify the channel vector for kind and for partial_grundy."""
    if not state.nodes:
        return None, None
    g = interference_graph(state)
    coloring = Coloring(tuple(state.channels))
    return verify(g, coloring, kind), verify(g, coloring, ColoringKind.PARTIAL_GRUNDY)


def run(scenario: Scenario) -> RunResult:
    """
    Play a scenario: events fire when the network reaches their round,
    before that round's step. After the last event the simulation stops
    at the first stable round, or after max_rounds further rounds.
    """
    rule = get_rule(scenario.rule)
    state = NetworkState.from_scenario(scenario)
    pending = [(at_round, list(events)) for at_round, events in groupby(scenario.events, key=lambda e: e.at_round)]

    trace: List[RoundMetrics] = []
    reconvergence: List[Reconvergence] = []
    converged = False
    rounds_after_last = 0

    while True:
        if pending and pending[0][0] == state.round:
            at_round, events = pending.pop(0)
            for event in events:
                state = apply_event(state, event, default_seed=scenario.seed)
            reconvergence.append(Reconvergence(event_round=at_round))

        state, metrics = step(state, rule)
        trace.append(metrics)

        if reconvergence and reconvergence[-1].rounds is None and metrics.stable:
            last = reconvergence[-1]
            last.rounds = metrics.round - last.event_round

        if pending:
            continue
        if metrics.stable:
            converged = True
            break
        rounds_after_last += 1
        if rounds_after_last >= scenario.max_rounds:
            break

    fixpoint, partial = fixpoint_reports(state, rule.fixpoint_kind)
    if converged:
        logger.info(f"✅ Converged at round {state.round} with {len(set(state.channels))} channels")
    return RunResult(
        trace=trace,
        final=state,
        converged=converged,
        fixpoint_report=fixpoint,
        partial_grundy_report=partial,
        reconvergence=reconvergence,
    )
