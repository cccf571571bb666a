from fractions import Fraction
from math import factorial

import pytest

from cyclefactor.characters import (
    character,
    character_table,
    count_frobenius,
    count_hook,
    dimension,
    hook_character,
)
from cyclefactor.errors import CapacityError
from cyclefactor.partitions import Partition, hook_partition, partitions_of, z_lambda

from independent import alternant_character

P = Partition


def test_trivial_representation():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert character(P([n]), lam) == 1


def test_sign_representation():
    assert character(P([1, 1, 1]), P([2, 1])) == -1
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert character(P([1] * n), lam) == (-1) ** (n - len(lam))


@pytest.mark.parametrize("cls, value", [([2, 1], 0), ([3], -1), ([1, 1, 1], 2)])
def test_standard_representation_of_s3(cls, value):
    assert alternant_character((2, 1), tuple(cls)) == value
    assert character(P([2, 1]), P(cls)) == value


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_match_alternant_formula(n):
    for rho in partitions_of(n):
        for lam in partitions_of(n):
            assert character(rho, lam) == alternant_character(tuple(rho), tuple(lam))


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character(P([2, 1]), P([2]))


def test_hook_character_endpoints():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert hook_character(n, 0, lam) == 1
            assert hook_character(n, n - 1, lam) == (-1) ** (n - len(lam))
    assert hook_character(3, 1, P([1, 1, 1])) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_character_agrees_with_border_strips(n):
    for r in range(n):
        for lam in partitions_of(n):
            assert hook_character(n, r, lam) == character(hook_partition(n, r), lam)


@pytest.mark.parametrize("r", [-1, 4])
def test_hook_character_range(r):
    with pytest.raises(ValueError):
        hook_character(4, r, P([4]))


def test_small_tables():
    assert character_table(1).as_matrix() == [[1]]
    t2 = character_table(2)
    assert t2[P([2]), P([2])] == t2[P([2]), P([1, 1])] == t2[P([1, 1]), P([1, 1])] == 1
    assert t2[P([1, 1]), P([2])] == -1
    assert len(t2.values) == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    table = character_table(n)
    parts = table.partitions
    for lam in parts:
        for mu in parts:
            s = sum(table[rho, lam] * table[rho, mu] for rho in parts)
            assert s == (z_lambda(lam) if lam == mu else 0)


def test_row_orthogonality_n5():
    table = character_table(5)
    parts = table.partitions
    assert len(parts) == 7
    for rho in parts:
        for sigma in parts:
            s = sum(Fraction(table[rho, lam] * table[sigma, lam], z_lambda(lam)) for lam in parts)
            assert s == (1 if rho == sigma else 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_dimensions_positive(n):
    dims = [dimension(rho) for rho in partitions_of(n)]
    assert all(d >= 1 for d in dims)
    assert sum(d * d for d in dims) == factorial(n)


def test_table_limit():
    with pytest.raises(CapacityError, match="12"):
        character_table(13)
    assert character_table(13, limit=13).n == 13


def test_character_values_bounded_by_dimension():
    table = character_table(7)
    ident = P([1] * 7)
    for (rho, lam), v in table.values.items():
        assert abs(v) <= table[rho, ident]


@pytest.mark.parametrize(
    "nu, lam, mu, count",
    [([1, 1], [2], [2], 1), ([3], [2, 1], [2, 1], 3), ([2, 1], [2, 1], [3], 2)],
)
def test_count_frobenius_examples(nu, lam, mu, count):
    assert count_frobenius(P(nu), P(lam), P(mu)) == count


@pytest.mark.parametrize("lam, mu, count", [([1], [1], 1), ([2, 1], [2, 1], 3), ([5], [5], 8)])
def test_count_hook_examples(lam, mu, count):
    assert count_hook(P(lam), P(mu)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_formula_specializes_frobenius(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert count_hook(lam, mu) == count_frobenius(P([n]), lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_symmetric(n):
    parts = partitions_of(n)
    for nu in parts:
        for lam in parts:
            for mu in parts:
                assert count_frobenius(nu, lam, mu) == count_frobenius(nu, mu, lam)


def test_count_weight_mismatch():
    with pytest.raises(ValueError):
        count_hook(P([2]), P([3]))
    with pytest.raises(ValueError):
        count_frobenius(P([3]), P([2, 1]), P([2]))
