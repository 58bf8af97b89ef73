import pytest
from hypothesis import given, settings, strategies as st

from youngfib import kernels
from youngfib.poset import FinitePoset, is_graded, is_lattice
from youngfib.snakeshape import shapes_of_size
from youngfib.yfinsertion import insert_p
from youngfib.yfposet import (
    BoundError,
    adjacent_swap,
    bottom_element,
    induced_yft_relation,
    shift_entry,
    shift_targets,
    top_element,
    weak_leq,
    weak_order_sn,
    weak_order_yft,
    yft_rank,
)
from youngfib.yftableau import (
    column_canonical,
    enumerate_standard,
    is_standard,
    parse_tableau,
    rho_max,
    rho_min,
    row_canonical,
    standard_tableaux,
)

import oracles
from reference_values import YFT5_RANK_SIZES, YFT5_TOP

T = parse_tableau


def targets(text):
    return {str(s) for s in shift_targets(T(text))}


@pytest.mark.parametrize(
    "source, column, result",
    [
        ("2:5 4 3 1", 3, "2:5 4 1:3"),
        ("4:5 2:3 1", 1, "2:5 4 3 1"),
        ("2:5 1:4 3", 1, "1:5 2:4 3"),
    ],
)
def test_single_shifts(source, column, result):
    assert str(shift_entry(T(source), column)) == result
    assert result in targets(source)


def test_single_row_targets():
    assert targets("3 2 1") == {"2:3 1", "3 1:2"}


def test_shift_requires_smaller_entry():
    # 4 cannot climb onto 3
    assert shift_entry(T("3 4 2 1"), 1) is None
    assert shift_entry(T("3 4 2 1"), 0) is None


def test_oversize_needs_explicit_bound():
    with pytest.raises(BoundError, match="larger bound"):
        weak_order_yft(9)
    with pytest.raises(BoundError):
        weak_order_sn(9)


def _labeling_literal(u):
    """Label bottom cells by the 2-columns on their left, top cells one more."""
    labels = []
    for j, h in enumerate(u.parts):
        left = u.parts[:j].count(2)
        labels.append(left)
        if h == 2:
            labels.append(left + 1)
    return sum(labels)


def test_labeling_rule_example():
    assert rho_max("2212") == 11
    assert rho_min("2212") == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_extremes_per_shape(n):
    for u in shapes_of_size(n):
        ranks = {t: yft_rank(t) for t in enumerate_standard(u)}
        assert yft_rank(column_canonical(u)) == u.parts.count(2) == min(ranks.values())
        assert yft_rank(row_canonical(u)) == _labeling_literal(u) == rho_max(u) == max(ranks.values())
        assert list(ranks.values()).count(min(ranks.values())) == 1
        assert list(ranks.values()).count(max(ranks.values())) == 1


def test_yft_order_at_five():
    p = weak_order_yft(5)
    assert len(p) == 26
    assert is_graded(p) and p.covers_respect_rank()
    assert [len(v) for v in p.rank_levels().values()] == YFT5_RANK_SIZES
    assert str(top_element(p)) == YFT5_TOP
    assert str(bottom_element(p)) == "5 4 3 2 1"
    assert not is_lattice(p)


def test_single_element_order():
    p = weak_order_yft(1)
    assert len(p) == 1 and top_element(p) == bottom_element(p)


@pytest.mark.parametrize("n", range(1, 7))
def test_shift_covers_raise_rank_by_one(n):
    for t in standard_tableaux(n):
        for s in shift_targets(t):
            assert is_standard(s) and s.size == n
            assert yft_rank(s) == yft_rank(t) + 1
            assert t not in shift_targets(s)


@pytest.mark.parametrize("n", range(1, 8))
def test_unique_top(n):
    p = weak_order_yft(n)
    top = top_element(p)
    assert all(p.leq(t, top) for t in p.elements)


def test_sn_small_orders():
    p2 = weak_order_sn(2)
    assert p2.lt((1, 2), (2, 1))
    p3 = weak_order_sn(3)
    assert len(p3) == 6 and is_lattice(p3) and set(p3.rank.values()) == {0, 1, 2, 3}
    assert adjacent_swap((1, 2, 3), 2) == (1, 3, 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))))
def test_weak_leq_matches_inversion_sets(pair):
    a, b = map(tuple, pair)
    assert weak_leq(a, b) == oracles.weak_leq(a, b)


def test_induced_relation_is_not_transitive_at_four():
    a, b, c = T("4 2:3 1"), T("4 1:3 2"), T("1:4 3 2")
    induced = induced_yft_relation(4)
    assert (a, b) in induced and (b, c) in induced
    assert (a, c) not in induced
    assert weak_order_yft(4).leq(a, c)


@pytest.mark.parametrize("n", range(1, 6))
def test_order_is_closure_of_induced_relation(n):
    p = weak_order_yft(n)
    induced = induced_yft_relation(n)
    assert induced <= p.relation()
    closure = FinitePoset.from_relation(p.elements, [x for x in induced if x[0] != x[1]])
    assert closure.relation() == p.relation()


def test_induced_relation_from_pairs_directly():
    perms = [tuple(int(x) for x in r) for r in kernels.all_permutations(3)]
    direct = {(insert_p(a), insert_p(b)) for a in perms for b in perms if oracles.weak_leq(a, b)}
    assert induced_yft_relation(3) == direct
