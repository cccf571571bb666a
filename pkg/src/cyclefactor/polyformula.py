"""The cancellation-free formula for long-cycle factorizations.

For a part size r let Q_r(a, b) = (a + b)**r - (a - b)**r, and for a class
lam let R_lam = prod_i Q_{lam_i} / (z_lam * b). Writing r_lam[k, l] for the
coefficient of a**k * b**l in R_lam, the number of factorizations of an
n-cycle into classes lam and mu is

    n / 2**(n + 1) * sum_{k, l} r_lam[k, l] * r_mu[l, k] * k! * l!

Every term of that sum is nonnegative.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from operator import mul
from typing import Iterable, Iterator, Mapping

from .errors import ConsistencyError
from .partitions import Partition, check_same_weight, z_lambda

Monomial = tuple[int, int]


class BivariatePoly:
    """Sparse polynomial in a, b with exact rational coefficients.

    Coefficients live in a dict keyed by the exponent pair ``(k, l)`` of
    ``a**k * b**l``. Zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Monomial, int | Fraction] | None = None):
        self._coeffs: dict[Monomial, Fraction] = {}
        for (k, l), c in (coeffs or {}).items():
            if k < 0 or l < 0:
                raise ValueError(f"negative exponent in monomial {(k, l)}")
            c = Fraction(c)
            if c:
                self._coeffs[int(k), int(l)] = c

    @classmethod
    def _raw(cls, coeffs: dict[Monomial, Fraction]) -> BivariatePoly:
        poly = cls.__new__(cls)
        poly._coeffs = {m: c for m, c in coeffs.items() if c}
        return poly

    @classmethod
    def constant(cls, c: int | Fraction) -> BivariatePoly:
        return cls({(0, 0): c})

    @classmethod
    def a(cls) -> BivariatePoly:
        return cls({(1, 0): 1})

    @classmethod
    def b(cls) -> BivariatePoly:
        return cls({(0, 1): 1})

    def coeff(self, k: int, l: int) -> Fraction:
        return self._coeffs.get((k, l), Fraction(0))

    def coefficients(self) -> dict[Monomial, Fraction]:
        return dict(self._coeffs)

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Monomials in decreasing a-degree, then decreasing b-degree."""
        for m in sorted(self._coeffs, reverse=True):
            yield m, self._coeffs[m]

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((k + l for k, l in self._coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return len({k + l for k, l in self._coeffs}) <= 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly._raw({m: -c for m, c in self._coeffs.items()})

    def __add__(self, other: BivariatePoly | int | Fraction) -> BivariatePoly:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return BivariatePoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: BivariatePoly | int | Fraction) -> BivariatePoly:
        return self + (-other)

    def __mul__(self, other: BivariatePoly | int | Fraction) -> BivariatePoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for (k1, l1), c1 in self._coeffs.items():
            for (k2, l2), c2 in other._coeffs.items():
                m = (k1 + k2, l1 + l2)
                out[m] = out.get(m, 0) + c1 * c2
        return BivariatePoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivariatePoly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int | Fraction) -> BivariatePoly:
        c = Fraction(c)
        return BivariatePoly._raw({m: c * v for m, v in self._coeffs.items()})

    def divide_by_b(self) -> BivariatePoly:
        """Exact division by b; every monomial must carry a factor of b."""
        if any(l == 0 for _, l in self._coeffs):
            raise ConsistencyError(f"{self} is not divisible by b")
        return BivariatePoly._raw({(k, l - 1): c for (k, l), c in self._coeffs.items()})

    def __call__(self, a, b):
        return sum((c * a**k * b**l for (k, l), c in self._coeffs.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for (k, l), c in self.terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("a", k), ("b", l)) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces)


@lru_cache(maxsize=None)
def q_poly(r: int) -> BivariatePoly:
    """Q_r(a, b) = (a + b)**r - (a - b)**r = sum over odd l of 2*C(r, l) a**(r-l) b**l."""
    if r < 1:
        raise ValueError(f"Q_r needs r >= 1, got {r}")
    return BivariatePoly({(r - l, l): 2 * comb(r, l) for l in range(1, r + 1, 2)})


@lru_cache(maxsize=None)
def _r_poly(lam: Partition) -> BivariatePoly:
    product = BivariatePoly.constant(1)
    for part in lam:
        product = product * q_poly(part)
    return product.divide_by_b().scale(Fraction(1, z_lambda(lam)))


def r_poly(lam: Partition) -> BivariatePoly:
    """R_lam = prod_i Q_{lam_i} / (z_lam * b), homogeneous of degree n - 1."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("R_lambda is undefined for the empty partition")
    return _r_poly(lam)


def r_coefficients(lam: Partition) -> dict[Monomial, Fraction]:
    """The coefficients r_lam[k, l] of a**k * b**l in R_lam."""
    return r_poly(lam).coefficients()


def pairing_sum(lam: Partition, mu: Partition) -> Fraction:
    """sum_{k,l} r_lam[k, l] * r_mu[l, k] * k! * l!, accumulated in Fractions."""
    check_same_weight(Partition(lam), Partition(mu))
    r_mu = r_coefficients(mu)
    total = Fraction(0)
    for (k, l), c in r_coefficients(lam).items():
        other = r_mu.get((l, k))
        if other:
            total += c * other * factorial(k) * factorial(l)
    return total


@lru_cache(maxsize=None)
def _pairing_vector(lam: Partition) -> tuple[int, ...]:
    # entry k is z_lam * r_lam[k, n-1-k] * k!, an integer for valid R_lam
    n = sum(lam)
    z = z_lambda(lam)
    vec = [0] * n
    for (k, l), c in r_coefficients(lam).items():
        if k + l != n - 1:
            raise ConsistencyError(f"R_{list(lam)} has monomial a^{k} b^{l} off degree {n - 1}")
        scaled = c * z
        if scaled.denominator != 1:
            raise ConsistencyError(f"z * R_{list(lam)} has non-integer coefficient {scaled}")
        vec[k] = int(scaled) * factorial(k)
    return tuple(vec)


def _finish(n: int, lam: Partition, mu: Partition, paired: int) -> int:
    num = n * paired
    den = z_lambda(lam) * z_lambda(mu) << (n + 1)
    count, rem = divmod(num, den)
    if rem or count < 0:
        raise ConsistencyError(
            f"positive formula for lambda={list(lam)}, mu={list(mu)} "
            f"reduced to {Fraction(num, den)}, expected a nonnegative integer"
        )
    return count


def count_positive(lam: Partition, mu: Partition) -> int:
    """Number of factorizations of an n-cycle into classes ``lam`` and ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    n = check_same_weight(lam, mu)
    u = _pairing_vector(lam)
    v = _pairing_vector(mu)
    # r_mu[l, k] sits at index l = n-1-k of v
    return _finish(n, lam, mu, sum(map(mul, u, reversed(v))))


def count_positive_row(lam: Partition, mus: Iterable[Partition]) -> list[int]:
    """``count_positive(lam, mu)`` for each ``mu``, sharing the per-class setup."""
    lam = Partition(lam)
    n = sum(lam)
    u = _pairing_vector(lam)
    out = []
    for mu in mus:
        mu = Partition(mu)
        check_same_weight(lam, mu)
        v = _pairing_vector(mu)
        out.append(_finish(n, lam, mu, sum(map(mul, u, reversed(v)))))
    return out


def clear_caches() -> None:
    """Drop memoized R_lam and pairing data."""
    _r_poly.cache_clear()
    _pairing_vector.cache_clear()
