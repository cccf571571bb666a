"""Irreducible characters of S_n and the character-sum counting formulas.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets:
removing a border strip of length k from a shape is the same as sliding one
bead of its beta-set down by k onto a free position, with sign given by the
parity of the beads jumped over.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import CapacityError, ConsistencyError
from .partitions import (
    Partition,
    check_same_weight,
    partitions_of,
    z_lambda,
)

DEFAULT_TABLE_LIMIT = 12


def _beta_to_shape(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    return tuple(p for p in (b - (m - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cls: tuple[int, ...]) -> int:
    # cls is sorted descending; strip the largest part first
    if not cls:
        return 1 if not shape else 0
    k, rest = cls[0], cls[1:]
    m = len(shape)
    beta = [p + (m - 1 - i) for i, p in enumerate(shape)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = [target if c == b else c for c in beta]
        value = _mn(_beta_to_shape(new_beta), rest)
        total += -value if jumped % 2 else value
    return total


def character(rho: Partition, lam: Partition) -> int:
    """chi^rho evaluated on the class of cycle type ``lam``."""
    check_same_weight(rho, lam)
    return _mn(tuple(Partition(rho)), tuple(Partition(lam)))


def dimension(rho: Partition) -> int:
    n = sum(rho)
    return character(rho, Partition((1,) * n))


@lru_cache(maxsize=None)
def _hook_series(lam: tuple[int, ...]) -> tuple[int, ...]:
    # sum_r chi^{(n-r,1^r)}_lam y^r = prod_i (1 - (-y)^{lam_i}) / (1 + y)
    poly = [1]
    for part in lam:
        factor = [0] * (part + 1)
        factor[0] = 1
        factor[part] = -((-1) ** part)
        out = [0] * (len(poly) + part)
        for i, c in enumerate(poly):
            if c:
                out[i] += c
                out[i + part] += c * factor[part]
        poly = out
    # synthetic division by (1 + y), lowest degree first
    quotient = []
    carry = 0
    for c in poly[:-1]:
        carry = c - carry
        quotient.append(carry)
    if poly[-1] - carry != 0:
        raise ConsistencyError(f"hook generating polynomial not divisible by 1+y for {lam}")
    return tuple(quotient)


def hook_character(n: int, r: int, lam: Partition) -> int:
    """chi^{(n-r, 1^r)} on the class ``lam``.

    Read off the generating polynomial prod_i (1 - (-y)^{lam_i}) / (1 + y),
    which is independent of the border-strip recursion used by
    :func:`character`.
    """
    if sum(lam) != n:
        raise ValueError(f"class {list(lam)} is not a partition of {n}")
    if not 0 <= r <= n - 1:
        raise ValueError(f"hook leg r={r} out of range for n={n}")
    return _hook_series(tuple(Partition(lam)))[r]


class CharacterTable:
    """Complete character table of S_n, rows indexed by irreducibles."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions_of(n)
        self.values = {
            (rho, lam): _mn(rho, lam) for rho in self.partitions for lam in self.partitions
        }

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        rho, lam = key
        return self.values[Partition(rho), Partition(lam)]

    def row(self, rho: Partition) -> list[int]:
        return [self.values[rho, lam] for lam in self.partitions]

    def as_matrix(self) -> list[list[int]]:
        return [self.row(rho) for rho in self.partitions]


@lru_cache(maxsize=None)
def _cached_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def character_table(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> CharacterTable:
    if n < 1:
        raise ValueError(f"character table needs n >= 1, got {n}")
    if n > limit:
        raise CapacityError(f"character table for n={n} exceeds the limit n <= {limit}")
    return _cached_table(n)


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{what} reduced to {value}, expected a nonnegative integer")
    return int(value)


def count_frobenius(
    nu: Partition, lam: Partition, mu: Partition, limit: int = DEFAULT_TABLE_LIMIT
) -> int:
    """Factorizations of a fixed class-``nu`` element as (class lam)(class mu).

    Evaluates n!/(z_lam z_mu) * sum_rho chi^rho_lam chi^rho_mu chi^rho_nu / dim(rho).
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    n = check_same_weight(nu, lam, mu)
    table = character_table(n, limit)
    identity = Partition((1,) * n)
    total = Fraction(0)
    for rho in table.partitions:
        num = table[rho, lam] * table[rho, mu] * table[rho, nu]
        if num:
            total += Fraction(num, table[rho, identity])
    total *= Fraction(factorial(n), z_lambda(lam) * z_lambda(mu))
    return _as_count(total, f"Frobenius sum for nu={list(nu)}, lambda={list(lam)}, mu={list(mu)}")


def count_hook(lam: Partition, mu: Partition) -> int:
    """Factorizations of the long cycle, as an alternating sum over hooks."""
    lam, mu = Partition(lam), Partition(mu)
    n = check_same_weight(lam, mu)
    hl = _hook_series(tuple(lam))
    hm = _hook_series(tuple(mu))
    total = 0
    for r in range(n):
        term = factorial(r) * factorial(n - 1 - r) * hl[r] * hm[r]
        total += -term if r % 2 else term
    value = Fraction(n * total, z_lambda(lam) * z_lambda(mu))
    return _as_count(value, f"hook sum for lambda={list(lam)}, mu={list(mu)}")


__all__ = [
    "CharacterTable",
    "DEFAULT_TABLE_LIMIT",
    "character",
    "character_table",
    "count_frobenius",
    "count_hook",
    "dimension",
    "hook_character",
]
