# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Grundy Kit - Grundy, partial Grundy and b-chromatic colorings, plus an ad hoc frequency assignment simulator.
"""

__version__ = "1.0.0"
__author__ = "Grundy Kit contributors"

# Re-export commonly used components for convenience
from .errors import GrundyKitError, InvalidInputError, MalformedColoringError, LimitExceededError, NotChordalError
from .graph import Graph, family
from .coloring import Coloring, ColoringKind, first_fit, verify, exact_parameter, parameter_bounds
from .chordal import lex_bfs, perfect_elimination_order, chordal_color

__all__ = [
    'GrundyKitError',
    'InvalidInputError',
    'MalformedColoringError',
    'LimitExceededError',
    'NotChordalError',
    'Graph',
    'family',
    'Coloring',
    'ColoringKind',
    'first_fit',
    'verify',
    'exact_parameter',
    'parameter_bounds',
    'lex_bfs',
    'perfect_elimination_order',
    'chordal_color',
]
