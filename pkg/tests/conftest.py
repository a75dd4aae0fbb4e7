# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Shared fixtures: small graphs, the seeded random corpus and a CLI runner.
"""

import io
import logging
import sys
from typing import List, Tuple

import pytest

from grundy_kit.graph import Graph, family, random_graph

CORPUS_SIZE = 200


def corpus_graph(seed: int) -> Graph:
    """Seeded random graph with 1..8 vertices and a density that varies with the seed."""
    n = 1 + seed % 8
    p = (seed % 5 + 1) / 6
    return random_graph(n, p, seed)


@pytest.fixture(scope="session")
def random_corpus() -> List[Graph]:
    return [corpus_graph(seed) for seed in range(CORPUS_SIZE)]


@pytest.fixture
def p4() -> Graph:
    return family("path", 4)


@pytest.fixture
def c4() -> Graph:
    return family("cycle", 4)


@pytest.fixture
def k3() -> Graph:
    return family("complete", 3)


@pytest.fixture
def run_cli(capsys, monkeypatch, tmp_path):
    """Run main() with argv and optional stdin text; returns (exit code, stdout, stderr)."""
    import main

    monkeypatch.delenv("GRUNDY_KIT_LIMIT", raising=False)
    monkeypatch.chdir(tmp_path)

    def runner(argv: List[str], stdin: str = "") -> Tuple[int, str, str]:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        try:
            code = main.main(argv)
        except SystemExit as e:
            code = e.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    root_logger = logging.getLogger()
    level = root_logger.level
    yield runner
    root_logger.setLevel(level)
