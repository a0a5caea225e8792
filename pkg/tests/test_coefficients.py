"""Coefficient sequences: definitions against their independent routes."""

import pytest
from hypothesis import given, strategies as st

from partlab import (
    CoeffSeq,
    c_from_product,
    c_from_recurrence,
    e_from_recurrence,
    euler_e,
    euler_product,
    euler_seq,
    f_equals_e_predicate,
    integrated_f,
    p_euler,
    pentagonal_index,
    pentagonal_pairs,
    sigma,
    sigma_table,
)

E_PREFIX = [-1, 1, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 1]
F_PREFIX = [-1, 0, 1, 1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 0, 1]


def test_known_prefixes():
    assert list(euler_seq(15).values) == E_PREFIX
    assert list(integrated_f(15).values) == F_PREFIX


def test_pentagonal_index_known():
    assert pentagonal_index(0) == 0
    assert [pentagonal_index(n) for n in (1, 2, 5, 7, 12, 15)] == [1, -1, 2, -2, 3, -3]
    assert all(pentagonal_index(n) is None for n in (3, 4, 6, 8, 9, 10, 11, 13))
    with pytest.raises(ValueError):
        pentagonal_index(-1)


@given(st.integers(min_value=-60, max_value=60))
def test_pentagonal_index_roundtrip(k):
    n = k * (3 * k - 1) // 2
    assert pentagonal_index(n) == k


def test_pentagonal_pairs_order():
    pairs = []
    for m, sign in pentagonal_pairs():
        if m > 30:
            break
        pairs.append((m, sign))
    assert pairs == [(1, 1), (2, 1), (5, -1), (7, -1), (12, 1), (15, 1), (22, -1), (26, -1)]
    assert all(euler_e(m) == sign for m, sign in pairs)


def test_product_is_negated_e():
    prod = euler_product(120)
    e = euler_seq(120)
    assert all(prod[n] == -e[n] for n in range(121))


def test_product_annihilates_counts():
    # convolving the full product against p gives the delta at 0
    prod = euler_product(60)
    p = [p_euler(n) for n in range(61)]
    for n in range(61):
        conv = sum(prod[k] * p[n - k] for k in range(n + 1))
        assert conv == (1 if n == 0 else 0)


def test_integrated_is_prefix_sum():
    e = euler_seq(300)
    f = integrated_f(300)
    acc = 0
    for n in range(301):
        acc += e[n]
        assert f[n] == acc
        assert f[n] in (-1, 0, 1)


def test_truncated_product_equals_integrated():
    assert c_from_product(250).values == integrated_f(250).values


def test_divisor_recurrences():
    assert c_from_recurrence(150).values == c_from_product(150).values
    assert e_from_recurrence(150).values == euler_seq(150).values


def test_equality_predicate():
    e = euler_seq(300)
    f = integrated_f(300)
    for n in range(301):
        assert f_equals_e_predicate(n) == (f[n] == e[n])


def test_sigma():
    assert [sigma(k) for k in range(1, 13)] == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28]
    table = sigma_table(400)
    assert table[0] == 0
    assert all(table[k] == sigma(k) for k in range(1, 401))
    with pytest.raises(ValueError):
        sigma(0)


def test_coeffseq_validation():
    with pytest.raises(ValueError):
        CoeffSeq("e", (0, 2))
    with pytest.raises(ValueError):
        CoeffSeq("c", (1, 0))  # must start at -1
    with pytest.raises(ValueError):
        CoeffSeq("c", (-1, 1))  # index 1 must be 0
    with pytest.raises(ValueError):
        CoeffSeq("q", (0,))
    seq = CoeffSeq("f", (-1, 0, 1))
    assert len(seq) == 3 and seq[2] == 1
