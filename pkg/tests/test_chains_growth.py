import json
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from youngfib.chains_growth import (
    ChainError,
    ShapeChain,
    audit_diagram,
    boundary_chains,
    canonical_labeling,
    chain_to_tableau,
    classify_cover,
    evacuate_letter,
    evacuation_steps,
    evacuation_tableau,
    growth_diagram,
    local_rule,
    parse_chain,
    tableau_to_chain,
    tableau_to_chain_direct,
)
from youngfib.snakeshape import EMPTY, covers_up, parse_shape, shapes_of_size
from youngfib.yfinsertion import insert_p, insert_pq
from youngfib.yftableau import format_tableau, parse_tableau, standard_tableaux

from reference_values import (
    CONVERSION_CHAIN,
    CONVERSION_TABLEAU,
    EVACUATED,
    EVACUATION_STEPS,
    GROWTH_ROWS,
    P_HAT,
    Q_HAT,
    WORKED_P,
    WORKED_Q,
    WORKED_SIGMA,
)

S = parse_shape
perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_conversion_worked_example():
    assert str(chain_to_tableau(parse_chain(CONVERSION_CHAIN))) == CONVERSION_TABLEAU


def test_boundary_chains_convert_to_p_and_q():
    assert str(chain_to_tableau(parse_chain(P_HAT))) == WORKED_P
    assert str(chain_to_tableau(parse_chain(Q_HAT))) == WORKED_Q
    assert str(tableau_to_chain(parse_tableau(WORKED_P))) == P_HAT
    assert str(tableau_to_chain(parse_tableau(WORKED_Q))) == Q_HAT


def test_trivial_chain():
    assert str(chain_to_tableau(parse_chain("e,1"))) == "1"
    assert str(tableau_to_chain(parse_tableau("1"))) == "e,1"


def test_invalid_chain_rejected():
    with pytest.raises(ChainError):
        chain_to_tableau(parse_chain("e,2"))
    with pytest.raises(ChainError):
        chain_to_tableau(parse_chain("1,11"))


def test_classify_cover_kinds():
    assert classify_cover(S("22"), S("122")) == ("front", 0)
    assert classify_cover(S("2211"), S("2221")) == ("top", 2)
    assert classify_cover(S("221"), S("2121")) == ("insert", 1)
    with pytest.raises(ChainError):
        classify_cover(S("22"), S("222"))


@pytest.mark.parametrize("n", range(0, 8))
def test_round_trips(n):
    for t in standard_tableaux(n):
        c = tableau_to_chain(t)
        assert c.is_saturated()
        assert chain_to_tableau(c) == t
        assert tableau_to_chain_direct(t) == c


def _chains(n):
    """Every saturated chain of length n."""
    out = [[EMPTY]]
    for _ in range(n):
        out = [c + [v] for c in out for v in covers_up(c[-1])]
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_side_round_trip(n):
    for c in _chains(n):
        chain = ShapeChain(tuple(c))
        assert tableau_to_chain(chain_to_tableau(chain)) == chain


def test_local_rule_cases():
    assert local_rule(EMPTY, EMPTY, EMPTY, 1) == S("1")
    assert local_rule(S("1"), S("11"), S("2"), 0) == S("21")
    assert local_rule(EMPTY, S("1"), EMPTY, 0) == S("1")
    assert local_rule(S("22"), S("212"), S("212"), 0) == S("222")
    assert local_rule(S("2"), S("2"), S("2"), 0) == S("2")
    assert local_rule(S("2"), S("2"), S("12"), 0) == S("12")


def test_local_rule_preconditions():
    with pytest.raises(ChainError):
        local_rule(S("1"), S("1"), S("2"), 1)
    with pytest.raises(ChainError):
        local_rule(S("1"), S("111"), S("1"), 0)


def test_growth_grid_cell_for_cell():
    d = growth_diagram(WORKED_SIGMA)
    assert [" ".join(row) for row in d.rows_top_down()] == GROWTH_ROWS
    p_hat, q_hat = boundary_chains(d)
    assert str(p_hat) == P_HAT and str(q_hat) == Q_HAT
    assert audit_diagram(d) == []


def test_growth_json_is_stable():
    d = growth_diagram(WORKED_SIGMA)
    data = json.loads(d.to_json())
    assert data["rows_top_down"][0] == GROWTH_ROWS[0].split()
    assert d.to_json() == growth_diagram(WORKED_SIGMA).to_json()


def test_audit_detects_tampering():
    d = growth_diagram(WORKED_SIGMA)
    grid = [list(col) for col in d.grid]
    grid[3][3] = S("11")
    bad = type(d)(d.sigma, tuple(tuple(c) for c in grid))
    assert audit_diagram(bad)


@pytest.mark.parametrize("n", range(1, 7))
def test_growth_equivalence_exhaustive(n):
    for s in permutations(range(1, n + 1)):
        d = growth_diagram(s)
        assert not audit_diagram(d)
        p_hat, q_hat = boundary_chains(d)
        p, q = insert_pq(s)
        assert chain_to_tableau(p_hat) == p
        assert chain_to_tableau(q_hat) == q


def test_evacuation_table_step_by_step():
    steps = evacuation_steps(parse_tableau(WORKED_P))
    got = [(a, format_tableau(t), cell) for a, t, cell in steps]
    assert got == EVACUATION_STEPS
    assert str(evacuation_tableau(parse_tableau(WORKED_P))) == EVACUATED


def test_evacuate_single_letters():
    assert str(evacuate_letter(parse_tableau("3:5 4 1:2"), 5)) == "3:4 1:2"
    assert str(evacuate_letter(parse_tableau(WORKED_P), 7)) == "3:6 4:5 1:2"
    assert str(evacuate_letter(parse_tableau("1"), 1)) == "e"
    with pytest.raises(ChainError):
        evacuate_letter(parse_tableau(WORKED_P), 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_evacuation_commutes_with_deletion(n):
    for s in permutations(range(1, n + 1)):
        p = insert_p(s)
        for a in p.tops:
            assert evacuate_letter(p, a) == insert_p([x for x in s if x != a])


@pytest.mark.parametrize("n", range(1, 6))
def test_evacuation_is_labeling_of_p_hat(n):
    for s in permutations(range(1, n + 1)):
        p_hat, _ = boundary_chains(growth_diagram(s))
        assert evacuation_tableau(insert_p(s)) == canonical_labeling(p_hat)


@settings(max_examples=80, deadline=None)
@given(perms)
def test_chain_dot_export(sigma):
    c = tableau_to_chain(insert_p(sigma))
    dot = c.to_dot()
    assert dot.count("->") == len(sigma)


def test_canonical_labeling_of_row_shapes():
    for u in shapes_of_size(4):
        for t in standard_tableaux(4):
            if t.shape == u:
                lab = canonical_labeling(tableau_to_chain(t))
                assert lab.shape == u
