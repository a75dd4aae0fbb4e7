# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Coloring engine: first-fit, verification, exact parameters, oracles and witnesses.
"""

from .models import Coloring, ColoringKind, Counterexample, VertexOrder, WitnessReport, BoundsReport
from .greedy import mex, first_fit
from .verify import verify
from .bounds import parameter_bounds, m_degree, second_degree, partial_grundy_bound, greedy_clique
from .solver import exact_parameter, find_coloring, default_limit, DEFAULT_LIMIT, DEFAULT_SEARCH_LIMIT
from .oracles import grundy_permutation_oracle, exhaustive_assignment_oracle, DEFAULT_ORACLE_LIMIT
from .witness import binomial_tree, DEFAULT_WITNESS_LIMIT
from .interchange import parse_coloring, coloring_to_lines, coloring_to_json
from .tables import parameter_table, TableEntry

__all__ = [
    'Coloring',
    'ColoringKind',
    'Counterexample',
    'VertexOrder',
    'WitnessReport',
    'BoundsReport',
    'mex',
    'first_fit',
    'verify',
    'parameter_bounds',
    'm_degree',
    'second_degree',
    'partial_grundy_bound',
    'greedy_clique',
    'exact_parameter',
    'find_coloring',
    'default_limit',
    'DEFAULT_LIMIT',
    'DEFAULT_SEARCH_LIMIT',
    'grundy_permutation_oracle',
    'exhaustive_assignment_oracle',
    'DEFAULT_ORACLE_LIMIT',
    'binomial_tree',
    'DEFAULT_WITNESS_LIMIT',
    'parse_coloring',
    'coloring_to_lines',
    'coloring_to_json',
    'parameter_table',
    'TableEntry',
]
