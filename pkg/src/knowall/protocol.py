"""Round-based execution over a known graph sequence.

The sequence itself is common knowledge; the only unknowns are the other
nodes' inputs.  After flooding for `budget` rounds a node's entire
usable knowledge is therefore the restriction of the input vector to its
in-neighborhood in the closure H_budget.  That restriction is the View,
and a candidate algorithm is any pure function of (sequence, k, view).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping

from .dyngraph import (
    DEFAULT_MAX_ROUNDS,
    Digraph,
    DynamicGraphSpec,
    closure,
    min_dominating_set,
    min_rounds,
)
from .errors import AlgorithmRangeError
from functools import lru_cache

InputConfig = tuple[int, ...]


def validate_inputs(values, n: int, k: int) -> InputConfig:
    vals = tuple(int(x) for x in values)
    if len(vals) != n:
        raise ValueError(f"expected {n} inputs, got {len(vals)}")
    for i, v in enumerate(vals, start=1):
        if not 0 <= v <= k:
            raise ValueError(f"input of node {i} is {v}, outside 0..{k}")
    return vals


def parse_inputs(text: str, n: int, k: int) -> InputConfig:
    """Digit-string form, node 1 first; rejects digits above k."""
    if len(text) != n or not text.isdigit():
        raise ValueError(f"expected {n} digits, got {text!r}")
    return validate_inputs((int(ch) for ch in text), n, k)


def format_inputs(values: InputConfig) -> str:
    return "".join(str(v) for v in values)


@dataclass(frozen=True)
class View:
    """Everything a node knows after `budget` rounds: the inputs it heard.

    `heard` maps sender to input over the observer's in-neighborhood in
    H_budget and always contains the observer itself.  Treat it as
    read-only.
    """

    observer: int
    budget: int
    heard: Mapping[int, int]


@dataclass(frozen=True)
class AlgorithmSpec:
    """Named candidate algorithm: a pure decision function of the view."""

    name: str
    decide: Callable[[DynamicGraphSpec, int, View], int]


@dataclass(frozen=True)
class OutcomeReport:
    outputs: tuple[int, ...]
    valid: bool
    agreeing: bool
    distinct_count: int


@lru_cache(maxsize=None)
def _in_neighbor_lists(H: Digraph) -> tuple[tuple[int, ...], ...]:
    ins: list[list[int]] = [[] for _ in range(H.n)]
    for u, v in sorted(H.arcs):
        ins[v - 1].append(u)
    return tuple(tuple(lst) for lst in ins)


def view_of(spec: DynamicGraphSpec, inputs, observer: int, budget: int) -> View:
    """Restriction of the input vector to what `observer` heard by `budget`."""
    if not 1 <= observer <= spec.n:
        raise ValueError(f"observer {observer} outside 1..{spec.n}")
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    vals = tuple(int(x) for x in inputs)
    if len(vals) != spec.n:
        raise ValueError(f"expected {spec.n} inputs, got {len(vals)}")
    senders = _in_neighbor_lists(closure(spec, budget))[observer - 1]
    return View(observer=observer, budget=budget,
                heard={j: vals[j - 1] for j in senders})


def run(spec: DynamicGraphSpec, k: int, alg: AlgorithmSpec, inputs,
        budget: int) -> OutcomeReport:
    """Execute one configuration and score validity and k-agreement.

    Valid means every output equals some node's input; agreeing means at
    most k distinct outputs.  Raises AlgorithmRangeError if the
    algorithm leaves {0..k} at any node.
    """
    vals = validate_inputs(inputs, spec.n, k)
    outputs = []
    for node in range(1, spec.n + 1):
        out = alg.decide(spec, k, view_of(spec, vals, node, budget))
        if not isinstance(out, int) or not 0 <= out <= k:
            raise AlgorithmRangeError(
                f"{alg.name} returned {out!r} at node {node}, outside 0..{k}")
        outputs.append(out)
    distinct = len(set(outputs))
    held = set(vals)
    return OutcomeReport(
        outputs=tuple(outputs),
        valid=all(out in held for out in outputs),
        agreeing=distinct <= k,
        distinct_count=distinct,
    )


# ---------------------------------------------------------------------------
# built-in algorithms
# ---------------------------------------------------------------------------


def flood_dominator(r: int | None = None,
                    max_rounds: int = DEFAULT_MAX_ROUNDS) -> AlgorithmSpec:
    """Optimal flooding: output the input of the smallest heard dominator.

    The dominating set is the exact minimum one of H_r, where r is the
    given intended budget or, when None, the tight bound for the spec at
    hand.  Run below that budget some nodes hear no dominator; they fall
    back to their own input, which keeps the algorithm
    validity-respecting at every budget.
    """

    def decide(spec: DynamicGraphSpec, k: int, view: View) -> int:
        rounds = r if r is not None else min_rounds(spec, k, max_rounds)
        members = min_dominating_set(closure(spec, rounds)).members
        for j in sorted(members):
            if j in view.heard:
                return view.heard[j]
        return view.heard[view.observer]

    name = "flood_dominator" if r is None else f"flood_dominator({r})"
    return AlgorithmSpec(name=name, decide=decide)


def _decide_min_heard(spec: DynamicGraphSpec, k: int, view: View) -> int:
    return min(view.heard.values())


def _decide_max_heard(spec: DynamicGraphSpec, k: int, view: View) -> int:
    return max(view.heard.values())


def _decide_majority_heard(spec: DynamicGraphSpec, k: int, view: View) -> int:
    counts = Counter(view.heard.values())
    return min(counts, key=lambda v: (-counts[v], v))


MIN_HEARD = AlgorithmSpec("min_heard", _decide_min_heard)
MAX_HEARD = AlgorithmSpec("max_heard", _decide_max_heard)
MAJORITY_HEARD = AlgorithmSpec("majority_heard", _decide_majority_heard)


def builtin_algorithms() -> list[AlgorithmSpec]:
    """All shipped algorithms; every one outputs a heard value or its own input."""
    return [flood_dominator(), MIN_HEARD, MAX_HEARD, MAJORITY_HEARD]


def algorithm_by_name(name: str) -> AlgorithmSpec:
    for alg in builtin_algorithms():
        if alg.name == name:
            return alg
    known = ", ".join(a.name for a in builtin_algorithms())
    raise ValueError(f"unknown algorithm {name!r}; known: {known}")


def flood_solve(spec: DynamicGraphSpec, k: int, inputs,
                max_rounds: int = DEFAULT_MAX_ROUNDS) -> OutcomeReport:
    """Solve k-set agreement in exactly the optimal number of rounds."""
    r = min_rounds(spec, k, max_rounds)
    report = run(spec, k, flood_dominator(r), inputs, budget=r)
    assert report.valid and report.agreeing, "flooding at the tight bound must succeed"
    return report
