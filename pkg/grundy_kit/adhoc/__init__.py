# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Ad hoc network frequency assignment: interference graphs, recoloring rules and the round simulator.
"""

from .models import (
    NodeRecord,
    JoinAction,
    LeaveAction,
    MoveAction,
    SetRangeAction,
    CorruptAction,
    TopologyEvent,
    Scenario,
    NetworkState,
    RoundMetrics,
)
from .interference import interference_graph, unit_disk_graph, pairwise_distances
from .rules import BaseRecoloringRule, StrictMexRule, ConflictOnlyRule, get_rule, get_supported_rules
from .simulator import step, apply_event, corrupt_channels, run, RunResult, Reconvergence
from .trace import trace_to_csv
from .scenarios import random_scenario, range_for_average_degree

__all__ = [
    'NodeRecord',
    'JoinAction',
    'LeaveAction',
    'MoveAction',
    'SetRangeAction',
    'CorruptAction',
    'TopologyEvent',
    'Scenario',
    'NetworkState',
    'RoundMetrics',
    'interference_graph',
    'unit_disk_graph',
    'pairwise_distances',
    'BaseRecoloringRule',
    'StrictMexRule',
    'ConflictOnlyRule',
    'get_rule',
    'get_supported_rules',
    'step',
    'apply_event',
    'corrupt_channels',
    'run',
    'RunResult',
    'Reconvergence',
    'trace_to_csv',
    'random_scenario',
    'range_for_average_degree',
]
