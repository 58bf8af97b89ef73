from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from youngfib.poset import (
    FinitePoset,
    PosetError,
    RankedPoset,
    is_graded,
    is_lattice,
    linear_extensions,
    poset_interval,
    to_dot,
)
from youngfib.yfposet import weak_order_sn

import oracles

DIAMOND = FinitePoset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def test_diamond_basics():
    assert DIAMOND.leq("a", "d") and not DIAMOND.leq("b", "c")
    assert DIAMOND.lt("a", "b") and not DIAMOND.lt("a", "a")
    assert DIAMOND.upset("b") == ["b", "d"]
    assert DIAMOND.downset("d") == list("abcd")
    assert DIAMOND.minimal_elements() == ["a"]
    assert DIAMOND.maximal_elements() == ["d"]
    assert DIAMOND.join("b", "c") == "d" and DIAMOND.meet("b", "c") == "a"
    assert is_lattice(DIAMOND) and is_graded(DIAMOND)


def test_interval_and_errors():
    assert poset_interval(DIAMOND, "a", "b") == ["a", "b"]
    with pytest.raises(PosetError):
        DIAMOND.interval("b", "c")


def test_construction_rejects_bad_covers():
    with pytest.raises(PosetError):
        FinitePoset("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(PosetError):
        FinitePoset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(PosetError):
        FinitePoset("ab", [("a", "z")])
    with pytest.raises(PosetError):
        FinitePoset("aa", [])


def test_from_relation_reduces_to_covers():
    p = FinitePoset.from_relation("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.covers == {("a", "b"), ("b", "c")}
    with pytest.raises(PosetError):
        FinitePoset.from_relation("ab", [("a", "b"), ("b", "a")])


def test_two_bowtie_is_not_a_lattice():
    p = FinitePoset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    assert not is_lattice(p)
    assert p.join("a", "b") is None


def test_ungraded_poset():
    pentagon = FinitePoset("abcde", [("a", "b"), ("b", "c"), ("c", "e"), ("a", "d"), ("d", "e")])
    assert not is_graded(pentagon)
    assert is_lattice(pentagon)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8).map(lambda s: (n, s))))
def test_linear_extensions_match_oracle(case):
    n, raw = case
    # orient every pair upward so the relation is acyclic
    pairs = {(min(a, b), max(a, b)) for a, b in raw if a != b}
    p = FinitePoset.from_relation(range(n), pairs)
    got = sorted(linear_extensions(p))
    assert got == sorted(oracles.linear_extensions(range(n), p.covers))
    assert p.count_linear_extensions() == len(got)


def test_weak_order_s4_is_a_lattice():
    p = weak_order_sn(4)
    assert len(p) == 24
    assert is_lattice(p) and is_graded(p) and p.covers_respect_rank()
    assert [len(v) for v in p.rank_levels().values()] == [1, 3, 5, 6, 5, 3, 1]


def test_weak_order_relation_is_inversion_containment():
    p = weak_order_sn(4)
    for a in permutations(range(1, 5)):
        for b in permutations(range(1, 5)):
            assert p.leq(a, b) == oracles.weak_leq(a, b)


def test_ranked_poset_needs_all_ranks():
    with pytest.raises(PosetError):
        RankedPoset("ab", [("a", "b")], {"a": 0})


def test_dot_and_json_exports():
    dot = to_dot(DIAMOND, name="D")
    assert dot.startswith("digraph D {") and dot.count("->") == 4
    ranked = RankedPoset("abcd", DIAMOND.covers, {"a": 0, "b": 1, "c": 1, "d": 2})
    assert "rank=same; n1; n2;" in to_dot(ranked)
    assert '"a": [\n    "b",\n    "c"\n  ]' in DIAMOND.covers_json()
