from math import factorial

import pytest
from hypothesis import given, strategies as st

from cyclefactor.errors import PartitionParseError
from cyclefactor.partitions import (
    Partition,
    class_size,
    format_partition,
    is_hook,
    parse_partition,
    partitions_of,
    z_lambda,
)

from independent import partition_count


@pytest.mark.parametrize(
    "text, parts",
    [("3,1,1", [3, 1, 1]), ("1,3,1", [3, 1, 1]), (" 2 , 2,1 ", [2, 2, 1]), ("7", [7])],
)
def test_parse_normalizes(text, parts):
    assert parse_partition(text) == Partition(parts)
    assert list(parse_partition(text)) == parts


@pytest.mark.parametrize("text, bad", [("0,2", "0"), ("3,-1", "-1"), ("2,x", "x"), ("2,,1", "")])
def test_parse_rejects_and_names_token(text, bad):
    with pytest.raises(PartitionParseError) as info:
        parse_partition(text)
    assert info.value.token == bad


@pytest.mark.parametrize("text", ["", "   "])
def test_parse_rejects_empty(text):
    with pytest.raises(PartitionParseError):
        parse_partition(text)


def test_partition_rejects_nonpositive_parts():
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_partitions_of_four_in_reverse_lex_order():
    assert [list(p) for p in partitions_of(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_partitions_of_zero():
    assert partitions_of(0) == (Partition(),)


def test_partitions_of_twenty():
    assert len(partitions_of(20)) == 627 == partition_count(20)


@pytest.mark.parametrize("n", range(31))
def test_partition_count_matches_pentagonal_recurrence(n):
    parts = partitions_of(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    assert all(p.n == n for p in parts)
    # reverse lexicographic means strictly decreasing as tuples
    assert all(a > b for a, b in zip(parts, parts[1:]))


@pytest.mark.parametrize(
    "parts, z", [([1, 1, 1], 6), ([2, 1], 2), ([5], 5), ([2, 2, 1], 8), ([3, 3, 1, 1], 36)]
)
def test_z_lambda(parts, z):
    assert z_lambda(Partition(parts)) == z


@pytest.mark.parametrize("parts, size", [([1, 1, 1], 1), ([2, 1], 3), ([3], 2), ([3, 2], 20)])
def test_class_size(parts, size):
    assert class_size(Partition(parts)) == size


@pytest.mark.parametrize("n", range(1, 11))
def test_class_sizes_sum_to_group_order(n):
    assert sum(class_size(lam) for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize(
    "parts, expected", [([4, 1, 1], (True, 2)), ([2, 2], (False, None)), ([1, 1, 1], (True, 2)), ([5], (True, 0))]
)
def test_is_hook(parts, expected):
    assert is_hook(Partition(parts)) == expected


@pytest.mark.parametrize("n", range(1, 16))
def test_exactly_n_hooks(n):
    legs = sorted(r for ok, r in map(is_hook, partitions_of(n)) if ok)
    assert legs == list(range(n))


def test_multiplicities():
    assert Partition([3, 1, 1]).multiplicities() == {3: 1, 1: 2}


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=10))
def test_format_parse_round_trip(parts):
    lam = Partition(parts)
    assert parse_partition(format_partition(lam)) == lam
    assert str(lam) == format_partition(lam)
