"""End-to-end refutation pipeline and the positive-direction certifier.

refute() takes any candidate algorithm claimed to work in fewer rounds
than the tight bound and produces a concrete, re-simulated
counterexample: either a configuration where some node outputs a value
nobody holds, or one where k+1 nodes output k+1 distinct values.
Verification deliberately goes back through the protocol module only,
so a bug in the triangulation machinery cannot certify itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dyngraph import DEFAULT_MAX_ROUNDS, DynamicGraphSpec, min_rounds
from .errors import BudgetNotBelowBound, LemmaFalsified
from .kuhn import (
    PrimitiveSimplex,
    algorithm_coloring,
    assign_node,
    check_sperner,
    find_panchromatic,
    inp,
)
from .oracle import EXHAUSTIVE_CONFIG_CAP, exhaustive_check, sample_check
from .protocol import AlgorithmSpec, InputConfig, OutcomeReport, format_inputs, run


class WitnessKind(Enum):
    AGREEMENT_VIOLATION = "AgreementViolation"
    VALIDITY_VIOLATION = "ValidityViolation"


@dataclass(frozen=True)
class Witness:
    """Verified counterexample; re-running the algorithm on `config` at
    `budget` reproduces outputs[i] at nodes[i]."""

    kind: WitnessKind
    config: InputConfig
    budget: int
    nodes: tuple[int, ...]
    outputs: tuple[int, ...]
    simplex: Optional[PrimitiveSimplex]
    verified: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "config": format_inputs(self.config),
            "budget": self.budget,
            "nodes": list(self.nodes),
            "outputs": list(self.outputs),
            "simplex": None if self.simplex is None else {
                "base": list(self.simplex.base),
                "perm": list(self.simplex.perm),
            },
            "verified": self.verified,
        }


def refute(spec: DynamicGraphSpec, k: int, alg: AlgorithmSpec, budget: int,
           max_rounds: int = DEFAULT_MAX_ROUNDS) -> Witness:
    """Build and verify a counterexample against `alg` run at `budget`.

    The budget must be strictly below the tight bound for the spec and
    k.  The coloring is evaluated lazily and memoized; the Sperner check
    short-circuits into a validity witness, otherwise the first
    panchromatic cell (in enumeration order) decodes into an agreement
    witness.  LemmaFalsified is a tripwire: it fires only if direct
    re-simulation disagrees with the combinatorial argument, which means
    a bug in this package, not in the algorithm under test.
    """
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    bound = min_rounds(spec, k, max_rounds)
    if budget >= bound:
        raise BudgetNotBelowBound(
            f"budget {budget} is not below the tight bound {bound}")

    n = spec.n
    coloring = algorithm_coloring(spec, k, budget, alg)
    sperner = check_sperner(n, k, coloring)

    if not sperner.is_sperner:
        v, col, _car = sperner.violations[0]
        config = inp(v, n)
        node = assign_node(spec, k, budget, v)
        report = run(spec, k, alg, config, budget)
        if report.outputs[node - 1] != col or col in set(config) or report.valid:
            raise LemmaFalsified(
                f"validity witness at vertex {v} did not re-simulate: "
                f"color {col}, node {node}, outputs {report.outputs}")
        return Witness(
            kind=WitnessKind.VALIDITY_VIOLATION,
            config=config,
            budget=budget,
            nodes=(node,),
            outputs=(col,),
            simplex=None,
            verified=True,
        )

    simplex = find_panchromatic(n, k, coloring)
    corners = simplex.vertices()
    config = inp(corners[0], n)
    nodes = tuple(assign_node(spec, k, budget, v) for v in corners)
    report = run(spec, k, alg, config, budget)
    outputs = tuple(report.outputs[w - 1] for w in nodes)
    if len(set(outputs)) != k + 1:
        raise LemmaFalsified(
            f"panchromatic cell {simplex} decoded to outputs {outputs} "
            f"in configuration {format_inputs(config)}; expected k+1 distinct")
    assert not report.agreeing, "k+1 distinct outputs cannot be agreeing"
    return Witness(
        kind=WitnessKind.AGREEMENT_VIOLATION,
        config=config,
        budget=budget,
        nodes=nodes,
        outputs=outputs,
        simplex=simplex,
        verified=True,
    )


@dataclass(frozen=True)
class OutcomeSummary:
    """Either a correctness check (exhaustive/sampled) or a refutation."""

    mode: str
    checked: int
    failure_count: int
    first_failure: Optional[tuple[InputConfig, OutcomeReport]]
    witness: Optional[Witness]
    passed: bool


def certify(spec: DynamicGraphSpec, k: int, alg: AlgorithmSpec, budget: int,
            max_rounds: int = DEFAULT_MAX_ROUNDS,
            config_cap: int = EXHAUSTIVE_CONFIG_CAP,
            samples: int = 1000, seed: int = 0) -> OutcomeSummary:
    """Check correctness when the budget suffices, else refute.

    With budget at or above the tight bound, runs the exhaustive
    configuration sweep when it fits under the cap and a seeded random
    sample otherwise.  Below the bound, delegates to refute and wraps
    the witness.
    """
    bound = min_rounds(spec, k, max_rounds)
    if budget < bound:
        witness = refute(spec, k, alg, budget, max_rounds)
        return OutcomeSummary(mode="refuted", checked=0, failure_count=1,
                              first_failure=None, witness=witness, passed=False)
    if (k + 1) ** spec.n <= config_cap:
        report = exhaustive_check(spec, k, alg, budget, cap=config_cap)
        mode = "exhaustive"
    else:
        report = sample_check(spec, k, alg, budget, samples=samples, seed=seed)
        mode = "sampled"
    first = report.failures[0] if report.failures else None
    return OutcomeSummary(mode=mode, checked=report.total_configs,
                          failure_count=len(report.failures),
                          first_failure=first, witness=None,
                          passed=report.passed)
