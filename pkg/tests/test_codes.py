"""Path codes: arithmetic, decoding, the partition view, and the pairing."""

import pytest
from hypothesis import given, strategies as st

from partlab import (
    Classification,
    InvalidCode,
    InvalidPartition,
    NotInDomain,
    PathCode,
    builtin_system,
    classify,
    code_of_path,
    decode_path,
    edge_count,
    enumerate_Bj,
    enumerate_strict,
    enumerate_terminating_paths,
    euler_e,
    from_strict_partition,
    involution,
    lemma51,
    pentagonal_codes,
    polarity,
    s_oracle,
    split_valuation,
    to_strict_partition,
    valuation,
)

bits_strategy = st.text(alphabet="01", min_size=0, max_size=16)


def test_code_basics():
    code = PathCode("1011")
    assert code.length == 4 and code.weight == 3
    assert code.one_indices() == (5, 3, 2)
    assert code.rightmost_one == 2
    assert code.bit(5) == 1 and code.bit(4) == 0
    assert str(code) == "1011"
    with pytest.raises(IndexError):
        code.bit(6)
    with pytest.raises(InvalidCode):
        PathCode("10x1")


def test_valuation_and_polarity():
    assert valuation("10100") == 10
    assert valuation("1011") == 10
    assert valuation("1000") == 5
    assert valuation("0011") == 5
    assert valuation("") == 0
    assert valuation("000") == 0
    assert polarity("10100") == -1
    assert polarity("1011") == 1
    assert polarity("1000") == 1
    assert polarity("0011") == -1
    with pytest.raises(InvalidCode):
        polarity("000")


def test_edge_count():
    assert edge_count("1") == 0
    assert edge_count("1000") == 0
    assert edge_count("0011") == 3
    assert edge_count("10100") == 2
    with pytest.raises(InvalidCode):
        edge_count("00")


def test_decode_worked_examples():
    walked = decode_path(10, "1011")
    assert walked.walk == ((10, 2), (8, 3), (9, 4), (5, 5))
    assert walked.classification is Classification.TERMINATING_BELOW

    walked = decode_path(10, "10100")
    assert walked.walk == ((10, 4), (11, 5), (6, 6))
    assert walked.classification is Classification.TERMINATING_BELOW

    for bits in ("1000", "0011"):
        assert decode_path(10, bits).classification is Classification.TERMINATING_AT
        # one index higher the same walks fall short of the wedge forever
        assert decode_path(11, bits).classification is Classification.NONTERMINATING


def test_decode_early_entry():
    # touches the wedge at its second vertex but keeps walking
    walked = decode_path(5, "011")
    assert walked.walk == ((5, 2), (3, 3), (4, 4))
    assert walked.classification is Classification.ENTERS_EARLY
    # ... while the arithmetic bounds alone would call it terminating: the
    # bounds only speak about genuine reduction paths
    assert lemma51(5, "011").terminating


def test_decode_all_zero():
    with pytest.raises(InvalidCode):
        decode_path(5, "000")
    assert classify(5, "000") is Classification.INVALID
    assert classify(10, "1011") is Classification.TERMINATING_BELOW


def test_lemma_predicates():
    rep = lemma51(10, "1011")
    assert rep.terminating and rep.strictly_below
    assert not rep.at_boundary
    assert rep.leftmost_one

    rep = lemma51(10, "0011")
    assert rep.terminating and rep.at_boundary
    assert not rep.strictly_below and not rep.leftmost_one

    rep = lemma51(12, "1000")
    assert not rep.terminating


def test_walk_length_is_edge_count():
    for bits in ("1", "1011", "10100", "110010"):
        assert len(decode_path(20, bits).walk) == edge_count(bits) + 1


def test_partition_bijection():
    assert to_strict_partition("1011") == (5, 3, 2)
    assert to_strict_partition("0011") == (3, 2)
    assert from_strict_partition((5, 3, 2)).bits == "1011"
    assert from_strict_partition((10,)).bits == "100000000"
    with pytest.raises(InvalidPartition):
        from_strict_partition((5, 3, 1))  # part below 2
    with pytest.raises(InvalidPartition):
        from_strict_partition(())
    with pytest.raises(InvalidCode):
        to_strict_partition("000")


@given(st.sets(st.integers(min_value=2, max_value=24), min_size=1, max_size=8))
def test_partition_roundtrip(parts_set):
    parts = tuple(sorted(parts_set, reverse=True))
    code = from_strict_partition(parts)
    assert to_strict_partition(code) == parts
    assert valuation(code) == sum(parts)
    assert polarity(code) == (1 if len(parts) % 2 == 1 else -1)


@given(bits_strategy, bits_strategy)
def test_split_valuation(prefix, suffix):
    assert split_valuation(prefix, suffix) == valuation(prefix + suffix)


def test_enumerate_Bj_small():
    assert [c.bits for c in enumerate_Bj(2)] == ["1"]
    assert [c.bits for c in enumerate_Bj(5)] == ["1000", "11"]
    assert [c.bits for c in enumerate_Bj(7)] == ["100000", "1001", "110"]
    assert enumerate_Bj(0) == () and enumerate_Bj(1) == ()
    with pytest.raises(ValueError):
        enumerate_Bj(-1)


def test_enumerate_Bj_counts():
    # |B_j| = number of strict partitions of j avoiding part 1; adding or
    # removing a single 1 gives |B_j| + |B_{j-1}| = (strict count of j)
    for j in range(2, 26):
        no_ones = sum(1 for parts in enumerate_strict(j) if parts and parts[-1] >= 2)
        assert len(enumerate_Bj(j)) == no_ones
        assert no_ones + len(enumerate_Bj(j - 1)) == s_oracle(j)


def test_involution_rule_one():
    assert involution(5, "1000").bits == "100"
    assert involution(5, "100").bits == "1000"
    assert involution(10, "10100").bits == "1100"
    assert involution(10, "1100").bits == "10100"


def test_involution_rule_two():
    # same valuation, opposite polarity
    assert involution(18, "111000").bits == "11110"
    assert involution(18, "11110").bits == "111000"
    assert valuation("111000") == valuation("11110") == 18
    assert polarity("111000") == -polarity("11110")


def test_involution_fixed_points():
    assert involution(2, "1").bits == "1"
    assert involution(5, "11").bits == "11"
    assert involution(7, "110").bits == "110"
    assert involution(12, "1110").bits == "1110"
    assert involution(15, "11100").bits == "11100"


def test_involution_domain():
    with pytest.raises(NotInDomain):
        involution(5, "1")  # valuation 2, needs 4 or 5
    with pytest.raises(NotInDomain):
        involution(5, "0100")  # leading zero
    with pytest.raises(NotInDomain):
        involution(5, "")


@pytest.mark.parametrize("j", range(2, 26))
def test_involution_is_involution(j):
    for code in enumerate_Bj(j) + enumerate_Bj(j - 1):
        image = involution(j, code)
        assert involution(j, image) == code
        assert valuation(image) in (j - 1, j)
        if valuation(image) != valuation(code):
            assert polarity(image) == polarity(code)
        elif image != code:
            assert polarity(image) == -polarity(code)


@pytest.mark.parametrize("j", range(2, 31))
def test_signed_sums_telescope(j):
    here = sum(polarity(c) for c in enumerate_Bj(j))
    prev = sum(polarity(c) for c in enumerate_Bj(j - 1))
    assert here - prev == euler_e(j)


def test_pentagonal_codes():
    codes = pentagonal_codes(12)
    assert [c.bits for c in codes[:4]] == ["1", "011", "1001", "100011"]
    assert [valuation(c) for c in codes] == [2, 5, 7, 12, 15, 22, 26, 35, 40, 51, 57, 70]
    lengths = [c.length for c in codes]
    assert lengths == sorted(lengths)
    assert all(euler_e(valuation(c)) == polarity(c) for c in codes)
    assert pentagonal_codes(0) == ()
    with pytest.raises(ValueError):
        pentagonal_codes(-1)


def test_code_of_path_roundtrip():
    system = builtin_system("maxpart")
    for n_tilde in (4, 7, 10, 13):
        for path in enumerate_terminating_paths(system, n_tilde):
            code = code_of_path(path)
            walked = decode_path(n_tilde, code)
            assert walked.classification in (
                Classification.TERMINATING_BELOW,
                Classification.TERMINATING_AT,
            )
            assert polarity(code) == path.sign
            # walk retraces exactly the auxiliary vertices of the path
            aux = [(v.n, v.k) for v in path.vertices[1:-1]]
            assert list(walked.walk) == aux


def test_code_of_path_rejects_bare_paths():
    from partlab import RootVertex, TerminalVertex, TerminatingPath

    bare = TerminatingPath((RootVertex(2), TerminalVertex(2)), 1, 2)
    with pytest.raises(ValueError):
        code_of_path(bare)
