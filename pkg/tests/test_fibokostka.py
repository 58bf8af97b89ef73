import csv
import io
import json

import numpy as np
import pytest

from youngfib.fibokostka import (
    KostkaMatrix,
    SizeMismatch,
    matrix_diff,
    n_matrix,
    n_number,
    n_number_bruteforce,
    okada_k,
    okada_k_by_interval,
    okada_matrix,
    zero_pair_count,
)
from youngfib.snakeshape import Snakeshape, shapes_of_size
from youngfib.yfposet import BoundError
from youngfib.yftableau import hook_count

import oracles
from reference_values import N6_ERRATUM, N6_ORDER, N6_PRINTED, OKADA5, OKADA5_ORDER


def test_n_number_examples():
    assert n_number("221", "1211") == 4
    assert n_number("222", "111111") == 15
    assert n_number("2112", "222") == 1
    assert n_number("11112", "222") == 0
    for n in range(1, 8):
        assert n_number("1" * n, "1" * n) == 1


def test_n_number_size_mismatch():
    with pytest.raises(SizeMismatch):
        n_number("2", "1")
    with pytest.raises(SizeMismatch):
        okada_k("21", "2")


def test_n_matrix_size_two():
    m = n_matrix(2)
    assert [str(s) for s in m.order] == ["2", "11"]
    assert m.rows() == [[0, 1], [1, 1]]
    for u in m.order:
        for v in m.order:
            assert m[u, v] == len(oracles.semistandard_yft(u.parts, v.parts))


@pytest.mark.parametrize("n", range(1, 7))
def test_recurrence_equals_enumeration(n):
    for u in shapes_of_size(n):
        for v in shapes_of_size(n):
            assert n_number(u, v) == n_number_bruteforce(u, v)


def test_n6_table_agrees_except_one_printed_cell():
    m = n_matrix(6)
    assert [str(s) for s in m.order] == N6_ORDER
    printed = KostkaMatrix(m.order, np.array(N6_PRINTED))
    u, v, printed_value, counted = N6_ERRATUM
    assert matrix_diff(printed, m) == [(u, v, printed_value, counted)]
    assert n_number_bruteforce(u, v) == counted


@pytest.mark.parametrize("n, expected", [(2, 1), (6, 5), (10, 34)])
def test_zero_pair_examples(n, expected):
    assert zero_pair_count(n) == expected


@pytest.mark.parametrize("n", range(2, 13))
def test_zero_pairs_are_fibonacci(n):
    assert zero_pair_count(n) == len(shapes_of_size(n - 2))


def test_zero_pair_count_needs_two():
    with pytest.raises(ValueError):
        zero_pair_count(1)


def test_okada_examples():
    assert okada_k("221", "1121") == 3
    assert okada_k("e", "e") == 1
    assert okada_k("22", "121") == 1
    assert okada_k_by_interval("221", "1121") == 3
    assert okada_k_by_interval("1112", "221") == 0
    assert okada_matrix(1).rows() == [[1]]


def test_okada_matrix_five_matches_reference():
    for method in ("recurrence", "interval"):
        m = okada_matrix(5, method=method)
        assert [str(s) for s in m.order] == OKADA5_ORDER
        assert m.rows() == OKADA5


@pytest.mark.parametrize("n", range(1, 7))
def test_okada_two_methods(n):
    assert matrix_diff(okada_matrix(n), okada_matrix(n, method="interval")) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_okada_standard_column_is_hook_count(n):
    for u in shapes_of_size(n):
        assert okada_k(u, "1" * n) == hook_count(u)


@pytest.mark.parametrize("n", range(2, 7))
def test_okada_vanishes_on_one_versus_two(n):
    for u in shapes_of_size(n - 1):
        for v in shapes_of_size(n - 2):
            assert okada_k(Snakeshape((1,) + u.parts), Snakeshape((2,) + v.parts)) == 0


def test_okada_rejects_bad_method_and_bound():
    with pytest.raises(ValueError):
        okada_matrix(3, method="magic")
    with pytest.raises(BoundError):
        okada_matrix(9, method="interval")


def test_matrix_exports():
    m = okada_matrix(3)
    text = m.to_text(dot_zero=True).splitlines()
    assert text[0].split() == ["|", "21", "12", "111"]
    assert text[3].split() == ["12", "|", ".", "1", "1"]
    rows = list(csv.reader(io.StringIO(m.to_csv())))
    assert rows[0] == ["", "21", "12", "111"]
    assert rows[1] == ["21", "1", "1", "2"]
    data = json.loads(m.to_json())
    assert data["order"] == ["21", "12", "111"]
    assert m["21", "111"] == 2


def test_matrix_shape_is_checked():
    with pytest.raises(ValueError):
        KostkaMatrix(tuple(shapes_of_size(2)), np.zeros((3, 3)))
