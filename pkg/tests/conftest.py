from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zagreb.canon import enumerate_connected
from zagreb.graphs import Graph

_CACHE: dict[int, list[Graph]] = {}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class,
    enumerated once per session."""
    if n not in _CACHE:
        acc: list[Graph] = []
        enumerate_connected(n, acc.append)
        _CACHE[n] = acc
    return _CACHE[n]


@pytest.fixture(scope="session")
def small_connected():
    return connected_graphs
