from __future__ import annotations

import random

import pytest

from knowall import (
    DynamicGraphSpec,
    Extension,
    complete_graph,
    directed_cycle,
    directed_path,
    save_graph_file,
    staggered_relay,
)


@pytest.fixture(scope="session")
def c5() -> DynamicGraphSpec:
    return directed_cycle(5)


@pytest.fixture(scope="session")
def p4() -> DynamicGraphSpec:
    return directed_path(4)


@pytest.fixture(scope="session")
def k4() -> DynamicGraphSpec:
    return complete_graph(4)


@pytest.fixture(scope="session")
def relay() -> DynamicGraphSpec:
    return staggered_relay()


@pytest.fixture
def c5_file(c5, tmp_path) -> str:
    path = tmp_path / "c5.json"
    save_graph_file(c5, str(path))
    return str(path)


def random_spec(rng: random.Random, max_n: int = 10, max_prefix: int = 3) -> DynamicGraphSpec:
    """Seeded random sequence for oracle-equivalence sweeps."""
    n = rng.randint(2, max_n)
    prob = rng.choice((0.1, 0.2, 0.35))
    rounds = []
    for _ in range(rng.randint(1, max_prefix)):
        arcs = frozenset(
            (u, v)
            for u in range(1, n + 1)
            for v in range(1, n + 1)
            if u != v and rng.random() < prob)
        rounds.append(arcs)
    ext = rng.choice((Extension.REPEAT_LAST, Extension.CYCLE))
    return DynamicGraphSpec(n=n, rounds=tuple(rounds), extension=ext)
