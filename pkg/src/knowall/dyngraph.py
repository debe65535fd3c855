"""Dynamic graph sequences and their information-flow closures.

A sequence of digraphs on a fixed node set [n] says which messages can
travel when: round t uses the arcs of G_t.  The r-round closure H_r has
an arc (u, v) whenever a token starting at u can, in each of rounds
1..r, either stay put or follow an arc of that round's graph and end at
v.  H_0 is the identity relation and every closure contains all
self-arcs.

Dominating sets of closures are what the rest of the package consumes.
A set D dominates H when every node is a member or has an in-arc from a
member, so after flooding for r rounds every node has heard the input
of at least one member of any dominating set of H_r.  The smallest r
whose closure admits a dominating set of size at most k is the exact
number of rounds needed to solve k-set agreement on the sequence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .errors import CapExceeded, GraphFormatError, NotDominatedWithinCap

Arc = tuple[int, int]

EXACT_SEARCH_CAP = 32
DEFAULT_MAX_ROUNDS = 64


class Extension(str, Enum):
    """Rule producing G_t beyond the stored prefix."""

    REPEAT_LAST = "repeat_last"
    CYCLE = "cycle"


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Digraph:
    """Arc set over nodes 1..n.  Self-arcs are allowed; closures have them all."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"digraph needs at least one node, got n={self.n}")
        object.__setattr__(self, "arcs", frozenset((int(u), int(v)) for u, v in self.arcs))
        for u, v in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u}, {v}) outside node range 1..{self.n}")

    def out_neighbors(self, u: int) -> frozenset[int]:
        return frozenset(v for (a, v) in self.arcs if a == u)

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for (u, b) in self.arcs if b == v)

    def to_dot(self) -> str:
        """DOT text with one line per arc, `u -> v;`."""
        lines = [f"  {u} -> {v};" for u, v in sorted(self.arcs)]
        return "digraph {\n" + "\n".join(lines) + ("\n" if lines else "") + "}\n"


@dataclass(frozen=True)
class DynamicGraphSpec:
    """Known communication sequence: a finite prefix plus an extension rule.

    Round graphs hold communication arcs only, so self-loops are rejected
    here; staying put is always possible and is modelled by the closure.
    """

    n: int
    rounds: tuple[frozenset[Arc], ...]
    extension: Extension = Extension.REPEAT_LAST

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least two nodes, got n={self.n}")
        rounds = tuple(frozenset((int(u), int(v)) for u, v in rnd) for rnd in self.rounds)
        if not rounds:
            raise ValueError("need at least one round graph")
        for t, rnd in enumerate(rounds, start=1):
            for u, v in rnd:
                if not (1 <= u <= self.n and 1 <= v <= self.n):
                    raise ValueError(f"round {t}: arc ({u}, {v}) outside 1..{self.n}")
                if u == v:
                    raise ValueError(f"round {t}: self-loop ({u}, {v}) not allowed")
        object.__setattr__(self, "rounds", rounds)
        object.__setattr__(self, "extension", Extension(self.extension))


@dataclass(frozen=True)
class DominatingSetResult:
    """Outcome of a dominating-set computation; `exact` is False for greedy."""

    size: int
    members: frozenset[int]
    exact: bool

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


# ---------------------------------------------------------------------------
# sequence access and closures
# ---------------------------------------------------------------------------


def graph_at(spec: DynamicGraphSpec, t: int) -> Digraph:
    """Round graph G_t for t >= 1, applying the extension rule past the prefix."""
    if t < 1:
        raise ValueError(f"rounds are numbered from 1, got t={t}")
    m = len(spec.rounds)
    if t <= m:
        arcs = spec.rounds[t - 1]
    elif spec.extension is Extension.REPEAT_LAST:
        arcs = spec.rounds[m - 1]
    else:
        arcs = spec.rounds[(t - 1) % m]
    return Digraph(spec.n, arcs)


@lru_cache(maxsize=None)
def _out_masks(arcs: frozenset[Arc], n: int) -> tuple[int, ...]:
    masks = [0] * n
    for u, v in arcs:
        masks[u - 1] |= 1 << (v - 1)
    return tuple(masks)


# reach masks per spec, grown lazily round by round; entry r holds, for each
# source u, the bitmask of nodes u's token can occupy after rounds 1..r
_REACH: dict[DynamicGraphSpec, list[tuple[int, ...]]] = {}


def _reach_masks(spec: DynamicGraphSpec, r: int) -> tuple[int, ...]:
    seq = _REACH.setdefault(spec, [tuple(1 << i for i in range(spec.n))])
    while len(seq) <= r:
        t = len(seq)
        out = _out_masks(graph_at(spec, t).arcs, spec.n)
        nxt = []
        for m in seq[-1]:
            acc = m
            rest = m
            while rest:
                low = rest & -rest
                acc |= out[low.bit_length() - 1]
                rest ^= low
            nxt.append(acc)
        seq.append(tuple(nxt))
    return seq[r]


@lru_cache(maxsize=None)
def closure(spec: DynamicGraphSpec, r: int) -> Digraph:
    """Information-flow closure H_r; H_0 is the identity relation."""
    if r < 0:
        raise ValueError(f"closure needs r >= 0, got {r}")
    masks = _reach_masks(spec, r)
    arcs = []
    for u in range(spec.n):
        m = masks[u]
        while m:
            low = m & -m
            arcs.append((u + 1, low.bit_length()))
            m ^= low
    return Digraph(spec.n, frozenset(arcs))


# ---------------------------------------------------------------------------
# dominating sets
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cover_masks(H: Digraph) -> tuple[int, ...]:
    # node u covers itself plus its out-neighbors
    covers = [1 << i for i in range(H.n)]
    for u, v in H.arcs:
        covers[u - 1] |= 1 << (v - 1)
    return tuple(covers)


def _dominator_masks(covers: tuple[int, ...]) -> tuple[int, ...]:
    n = len(covers)
    dom = [0] * n
    for u in range(n):
        m = covers[u]
        while m:
            low = m & -m
            dom[low.bit_length() - 1] |= 1 << u
            m ^= low
    return tuple(dom)


def _greedy_members(covers: tuple[int, ...], full: int) -> list[int]:
    n = len(covers)
    members = []
    uncovered = full
    while uncovered:
        gain, pick = 0, -1
        for u in range(n):
            g = (covers[u] & uncovered).bit_count()
            if g > gain:  # strict: ties go to the smallest id
                gain, pick = g, u
        members.append(pick + 1)
        uncovered &= ~covers[pick]
    return members


def _min_domination_size(covers: tuple[int, ...], dom: tuple[int, ...], full: int) -> int:
    n = len(covers)
    best = len(_greedy_members(covers, full))

    def rec(uncovered: int, size: int) -> None:
        nonlocal best
        if uncovered == 0:
            if size < best:
                best = size
            return
        maxgain = 0
        for u in range(n):
            g = (covers[u] & uncovered).bit_count()
            if g > maxgain:
                maxgain = g
        if size + -(-uncovered.bit_count() // maxgain) >= best:
            return
        # branch on the uncovered node with the fewest dominators
        pick, pickdom, fewest = -1, 0, n + 1
        m = uncovered
        while m:
            low = m & -m
            x = low.bit_length() - 1
            m ^= low
            c = dom[x].bit_count()
            if c < fewest:
                fewest, pick, pickdom = c, x, dom[x]
        while pickdom:
            low = pickdom & -pickdom
            u = low.bit_length() - 1
            pickdom ^= low
            rec(uncovered & ~covers[u], size + 1)

    rec(full, 0)
    return best


def _exists_cover(covers: tuple[int, ...], dom: tuple[int, ...],
                  uncovered: int, avail: int, slots: int) -> bool:
    if uncovered == 0:
        return True
    if slots == 0:
        return False
    pickdom, fewest = 0, 1 << 30
    m = uncovered
    while m:
        low = m & -m
        x = low.bit_length() - 1
        m ^= low
        dm = dom[x] & avail
        c = dm.bit_count()
        if c == 0:
            return False
        if c < fewest:
            fewest, pickdom = c, dm
    maxgain = 0
    a = avail
    while a:
        low = a & -a
        u = low.bit_length() - 1
        a ^= low
        g = (covers[u] & uncovered).bit_count()
        if g > maxgain:
            maxgain = g
    if maxgain * slots < uncovered.bit_count():
        return False
    while pickdom:
        low = pickdom & -pickdom
        u = low.bit_length() - 1
        pickdom ^= low
        if _exists_cover(covers, dom, uncovered & ~covers[u], avail, slots - 1):
            return True
    return False


def _lex_min_dominating(covers: tuple[int, ...], dom: tuple[int, ...],
                        full: int, size: int) -> list[int]:
    # the sorted member list is built greedily: each position takes the
    # smallest node that still allows completion with larger ids only
    n = len(covers)
    members: list[int] = []
    uncovered = full
    floor = 0
    for remaining in range(size, 0, -1):
        for u in range(floor, n):
            after = ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
            if _exists_cover(covers, dom, uncovered & ~covers[u], after, remaining - 1):
                members.append(u + 1)
                uncovered &= ~covers[u]
                floor = u + 1
                break
        else:
            raise AssertionError("exact size was feasible but reconstruction failed")
    return members


@lru_cache(maxsize=None)
def min_dominating_set(H: Digraph, cap: int = EXACT_SEARCH_CAP) -> DominatingSetResult:
    """Exact minimum dominating set; lexicographically smallest member list.

    Domination is directional: a member covers itself and its
    out-neighbors.  Raises CapExceeded when n exceeds the exact-search
    cap; greedy_dominating_set has no cap and can serve as a fallback.
    """
    if H.n > cap:
        raise CapExceeded(f"exact dominating-set search capped at n <= {cap}, got n = {H.n}")
    covers = _cover_masks(H)
    dom = _dominator_masks(covers)
    full = (1 << H.n) - 1
    size = _min_domination_size(covers, dom, full)
    members = _lex_min_dominating(covers, dom, full, size)
    return DominatingSetResult(size=size, members=frozenset(members), exact=True)


def greedy_dominating_set(H: Digraph) -> DominatingSetResult:
    """Max-coverage greedy upper bound; ties go to the smallest node id."""
    covers = _cover_masks(H)
    members = _greedy_members(covers, (1 << H.n) - 1)
    return DominatingSetResult(size=len(members), members=frozenset(members), exact=False)


@lru_cache(maxsize=None)
def min_rounds(spec: DynamicGraphSpec, k: int, max_rounds: int = DEFAULT_MAX_ROUNDS) -> int:
    """Smallest r >= 1 with a dominating set of H_r no larger than k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if max_rounds < 1:
        raise ValueError(f"max_rounds must be positive, got {max_rounds}")
    for r in range(1, max_rounds + 1):
        if min_dominating_set(closure(spec, r)).size <= k:
            return r
    raise NotDominatedWithinCap(
        f"no dominating set of size <= {k} within {max_rounds} rounds")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def spec_from_dict(obj: object) -> DynamicGraphSpec:
    """Build a spec from the JSON shape {"n", "rounds", "extension"}."""
    if not isinstance(obj, dict):
        raise GraphFormatError(f"graph document must be an object, got {type(obj).__name__}")
    try:
        n = int(obj["n"])
        rounds_raw = obj["rounds"]
    except KeyError as exc:
        raise GraphFormatError(f"graph document missing key {exc}") from None
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad n field: {exc}") from None
    extension = obj.get("extension", Extension.REPEAT_LAST.value)
    if not isinstance(rounds_raw, list) or not all(isinstance(r, list) for r in rounds_raw):
        raise GraphFormatError("rounds must be a list of arc lists")
    try:
        rounds: list[Iterable[Arc]] = []
        for rnd in rounds_raw:
            rounds.append([(int(u), int(v)) for u, v in rnd])
        ext = Extension(extension)
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad graph document: {exc}") from None
    try:
        return DynamicGraphSpec(n=n, rounds=tuple(frozenset(r) for r in rounds), extension=ext)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def spec_to_dict(spec: DynamicGraphSpec) -> dict:
    return {
        "n": spec.n,
        "rounds": [[list(arc) for arc in sorted(rnd)] for rnd in spec.rounds],
        "extension": spec.extension.value,
    }


def load_graph_file(path: str) -> DynamicGraphSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None
    return spec_from_dict(obj)


def save_graph_file(spec: DynamicGraphSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(spec_to_dict(spec), fh, indent=2, sort_keys=True)
        fh.write("\n")
