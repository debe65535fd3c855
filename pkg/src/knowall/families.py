"""Ready-made graph sequences used by the docs, the tests, and the README."""
from __future__ import annotations

from .dyngraph import DynamicGraphSpec, Extension


def directed_cycle(n: int) -> DynamicGraphSpec:
    """Static C_n with arcs i -> i+1 (mod n)."""
    arcs = frozenset((i, i % n + 1) for i in range(1, n + 1))
    return DynamicGraphSpec(n=n, rounds=(arcs,))


def complete_graph(n: int) -> DynamicGraphSpec:
    """Static K_n with both arc directions everywhere."""
    arcs = frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v)
    return DynamicGraphSpec(n=n, rounds=(arcs,))


def directed_path(n: int) -> DynamicGraphSpec:
    """Static path 1 -> 2 -> ... -> n."""
    arcs = frozenset((i, i + 1) for i in range(1, n))
    return DynamicGraphSpec(n=n, rounds=(arcs,))


def staggered_relay() -> DynamicGraphSpec:
    """Cycling 3-round sequence on 4 nodes where the relay order matters.

    Rounds cycle through {1->2}, {3->4}, {2->3}; node 1's token needs
    two trips around the period to reach node 4, so consensus takes five
    rounds even though each round graph is a single arc.
    """
    return DynamicGraphSpec(
        n=4,
        rounds=(frozenset({(1, 2)}), frozenset({(3, 4)}), frozenset({(2, 3)})),
        extension=Extension.CYCLE,
    )


def standard_family() -> list[tuple[str, DynamicGraphSpec, int]]:
    """(name, spec, k) triples exercised by the acceptance suite."""
    family: list[tuple[str, DynamicGraphSpec, int]] = []
    c5 = directed_cycle(5)
    for k in (1, 2):
        family.append((f"cycle5/k={k}", c5, k))
    for n in (3, 4, 5):
        kn = complete_graph(n)
        for k in (1, 2):
            family.append((f"complete{n}/k={k}", kn, k))
    p4 = directed_path(4)
    for k in (1, 2):
        family.append((f"path4/k={k}", p4, k))
    family.append(("staggered_relay/k=1", staggered_relay(), 1))
    return family
