from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knowall import (
    CapExceeded,
    Digraph,
    DynamicGraphSpec,
    Extension,
    GraphFormatError,
    NotDominatedWithinCap,
    closure,
    complete_graph,
    directed_cycle,
    directed_path,
    graph_at,
    greedy_dominating_set,
    load_graph_file,
    min_dominating_set,
    min_rounds,
    save_graph_file,
    spec_from_dict,
    spec_to_dict,
    staggered_relay,
)


def arcs_of(spec, t):
    return sorted(graph_at(spec, t).arcs)


@st.composite
def specs(draw, max_n=7, max_prefix=3):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    rounds = tuple(
        draw(st.frozensets(st.sampled_from(pairs)))
        for _ in range(draw(st.integers(1, max_prefix))))
    ext = draw(st.sampled_from([Extension.REPEAT_LAST, Extension.CYCLE]))
    return DynamicGraphSpec(n=n, rounds=rounds, extension=ext)


# ---------------------------------------------------------------------------
# sequence access
# ---------------------------------------------------------------------------


def test_graph_at_prefix_and_extensions():
    g1 = frozenset({(1, 2)})
    g2 = frozenset({(2, 3)})
    rep = DynamicGraphSpec(3, (g1, g2), Extension.REPEAT_LAST)
    cyc = DynamicGraphSpec(3, (g1, g2), Extension.CYCLE)
    assert arcs_of(rep, 1) == [(1, 2)]
    assert arcs_of(rep, 2) == [(2, 3)]
    assert arcs_of(rep, 3) == [(2, 3)]
    assert arcs_of(rep, 99) == [(2, 3)]
    assert arcs_of(cyc, 3) == [(1, 2)]
    assert arcs_of(cyc, 4) == [(2, 3)]
    assert arcs_of(cyc, 7) == [(1, 2)]


def test_graph_at_rejects_bad_round():
    with pytest.raises(ValueError):
        graph_at(directed_cycle(3), 0)


def test_spec_validation():
    with pytest.raises(ValueError):
        DynamicGraphSpec(1, (frozenset(),))
    with pytest.raises(ValueError):
        DynamicGraphSpec(3, ())
    with pytest.raises(ValueError):
        DynamicGraphSpec(3, (frozenset({(1, 4)}),))
    with pytest.raises(ValueError):
        DynamicGraphSpec(3, (frozenset({(2, 2)}),))


# ---------------------------------------------------------------------------
# closures
# ---------------------------------------------------------------------------


def test_closure_r0_is_identity(c5):
    assert closure(c5, 0).arcs == frozenset((i, i) for i in range(1, 6))


def test_closure_c5_is_cyclic_distance(c5):
    # (u, v) in H_r iff v is at most r steps ahead of u on the cycle
    for r in range(5):
        expected = frozenset(
            (u, (u - 1 + d) % 5 + 1) for u in range(1, 6) for d in range(min(r, 4) + 1))
        assert closure(c5, r).arcs == expected
    assert len(closure(c5, 1).arcs) == 10
    assert len(closure(c5, 2).arcs) == 15


def test_closure_uses_each_round_graph(relay):
    # staggered relays: node 1's token needs rounds 1, 3, and 5 (wrapping
    # the 3-round cycle) to reach node 4
    reach1 = [sorted(v for (u, v) in closure(relay, r).arcs if u == 1) for r in range(6)]
    assert reach1 == [[1], [1, 2], [1, 2], [1, 2, 3], [1, 2, 3], [1, 2, 3, 4]]


@settings(max_examples=40, deadline=None)
@given(specs(), st.integers(0, 5))
def test_closure_reflexive_and_monotone(spec, r):
    lo, hi = closure(spec, r), closure(spec, r + 1)
    for i in range(1, spec.n + 1):
        assert (i, i) in lo.arcs
    assert lo.arcs <= hi.arcs


@settings(max_examples=30, deadline=None)
@given(specs(max_prefix=1), st.integers(0, 4))
def test_closure_static_matches_bfs(spec, r):
    arcs = spec.rounds[0]
    for src in range(1, spec.n + 1):
        seen = {src}
        frontier = {src}
        for _ in range(r):
            frontier = {v for (u, v) in arcs if u in frontier and v not in seen}
            seen |= frontier
        assert {v for (u, v) in closure(spec, r).arcs if u == src} == seen


# ---------------------------------------------------------------------------
# dominating sets
# ---------------------------------------------------------------------------


def test_min_dominating_c5_closures(c5):
    d1 = min_dominating_set(closure(c5, 1))
    assert (d1.size, d1.sorted_members(), d1.exact) == (3, [1, 2, 4], True)
    d2 = min_dominating_set(closure(c5, 2))
    assert (d2.size, d2.sorted_members()) == (2, [1, 3])
    d4 = min_dominating_set(closure(c5, 4))
    assert (d4.size, d4.sorted_members()) == (1, [1])


def test_min_dominating_complete_and_identity():
    k4 = complete_graph(4)
    assert min_dominating_set(closure(k4, 1)).sorted_members() == [1]
    ident = closure(k4, 0)
    d = min_dominating_set(ident)
    assert (d.size, d.sorted_members()) == (4, [1, 2, 3, 4])


def test_lex_smallest_among_optima():
    # out-stars from 2 and from 4 both dominate alone; 2 < 4 must win
    arcs = frozenset({(2, 1), (2, 3), (2, 4), (4, 1), (4, 2), (4, 3)})
    H = Digraph(4, arcs | frozenset((i, i) for i in range(1, 5)))
    assert min_dominating_set(H).sorted_members() == [2]


def test_domination_is_directional():
    # only in-arcs from members count: sinks must join the set themselves
    H = Digraph(3, frozenset({(1, 1), (2, 2), (3, 3), (2, 1), (3, 1)}))
    d = min_dominating_set(H)
    assert d.sorted_members() == [2, 3]


def test_dominating_set_covers_everyone(c5, p4, relay):
    for spec in (c5, p4, relay, complete_graph(5)):
        for r in range(4):
            H = closure(spec, r)
            members = min_dominating_set(H).members
            covered = set(members)
            for u, v in H.arcs:
                if u in members:
                    covered.add(v)
            assert covered == set(range(1, spec.n + 1))


def test_exact_cap():
    big = Digraph(33, frozenset((i, i) for i in range(1, 34)))
    with pytest.raises(CapExceeded):
        min_dominating_set(big)
    assert min_dominating_set(big, cap=33).size == 33


def test_greedy_examples(c5):
    g = greedy_dominating_set(closure(c5, 1))
    assert (g.size, g.sorted_members(), g.exact) == (3, [1, 3, 4], False)
    assert greedy_dominating_set(closure(complete_graph(4), 1)).sorted_members() == [1]


@settings(max_examples=40, deadline=None)
@given(specs(), st.integers(0, 3))
def test_greedy_never_beats_exact(spec, r):
    H = closure(spec, r)
    assert greedy_dominating_set(H).size >= min_dominating_set(H).size


# ---------------------------------------------------------------------------
# min_rounds
# ---------------------------------------------------------------------------


def test_min_rounds_family(c5, p4, relay):
    assert min_rounds(c5, 2) == 2
    assert min_rounds(c5, 1) == 4
    assert min_rounds(p4, 1) == 3
    assert min_rounds(p4, 2) == 1
    assert min_rounds(relay, 1) == 5
    for n in (3, 4, 5):
        assert min_rounds(complete_graph(n), 1) == 1


def test_min_rounds_unsolvable():
    two_islands = DynamicGraphSpec(2, (frozenset(),))
    with pytest.raises(NotDominatedWithinCap):
        min_rounds(two_islands, 1, max_rounds=8)


def test_min_rounds_validates():
    with pytest.raises(ValueError):
        min_rounds(directed_cycle(3), 0)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_dict_round_trip(relay, c5):
    for spec in (relay, c5, directed_path(6)):
        assert spec_from_dict(spec_to_dict(spec)) == spec


def test_file_round_trip(tmp_path, relay):
    path = tmp_path / "relay.json"
    save_graph_file(relay, str(path))
    assert load_graph_file(str(path)) == relay


def test_graph_format_errors(tmp_path):
    with pytest.raises(GraphFormatError):
        spec_from_dict([1, 2])
    with pytest.raises(GraphFormatError):
        spec_from_dict({"n": 3})
    with pytest.raises(GraphFormatError):
        spec_from_dict({"n": 3, "rounds": [[[1, 1]]]})
    with pytest.raises(GraphFormatError):
        spec_from_dict({"n": 3, "rounds": [[[1, 2]]], "extension": "bogus"})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(GraphFormatError):
        load_graph_file(str(bad))


def test_dot_export():
    H = Digraph(3, frozenset({(1, 2), (2, 3), (1, 1)}))
    assert H.to_dot() == "digraph {\n  1 -> 1;\n  1 -> 2;\n  2 -> 3;\n}\n"


def test_spec_accepts_plain_containers():
    spec = DynamicGraphSpec(3, (frozenset([(1, 2)]), frozenset([(2, 3)])), "cycle")
    assert spec.extension is Extension.CYCLE
    assert json.dumps(spec_to_dict(spec))
