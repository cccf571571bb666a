"""Brute-force factorization counts by enumerating a conjugacy class.

Permutations are in one-line form on {1..n}. Products use the convention
``(s * t)(x) = s(t(x))``: the right factor acts first.
"""

from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError
from .partitions import Partition, check_same_weight, class_size

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV_VAR = "CYCLEFACTOR_BRUTE_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class Permutation:
    """A bijection of {1..n} given by its images ``[s(1), ..., s(n)]``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def _from_zero_based(cls, arr: Sequence[int]) -> Permutation:
        perm = cls.__new__(cls)
        perm.images = tuple(x + 1 for x in arr)
        return perm

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """The product sigma*tau, mapping x to sigma(tau(x))."""
    if sigma.n != tau.n:
        raise ValueError(f"cannot compose permutations of sizes {sigma.n} and {tau.n}")
    s = sigma.images
    return Permutation._from_zero_based([s[t - 1] - 1 for t in tau.images])


def _cycle_type0(arr: Sequence[int]) -> tuple[int, ...]:
    n = len(arr)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = arr[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycle_type(sigma: Permutation) -> Partition:
    return Partition(_cycle_type0([x - 1 for x in sigma.images]))


def canonical_cycle(n: int) -> Permutation:
    """The n-cycle 1 -> 2 -> ... -> n -> 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Permutation(list(range(2, n + 1)) + [1])


def canonical_representative(nu: Partition) -> Permutation:
    """Cycles of decreasing length on consecutive integers from 1.

    For ``nu = (n,)`` this is :func:`canonical_cycle`.
    """
    nu = Partition(nu)
    cycles = []
    start = 1
    for part in nu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(nu.n, cycles)


def _enumerate0(lam: Partition) -> Iterator[list[int]]:
    n = sum(lam)
    arr = [-1] * n
    remaining = Counter(lam)

    def place(unused: list[int]) -> Iterator[list[int]]:
        if not unused:
            yield arr
            return
        # the smallest unused point opens the next cycle; choose its length
        head = unused[0]
        rest = unused[1:]
        for length in sorted(remaining, reverse=True):
            if not remaining[length]:
                continue
            remaining[length] -= 1
            yield from fill(head, head, length - 1, rest)
            remaining[length] += 1

    def fill(head: int, last: int, todo: int, pool: list[int]) -> Iterator[list[int]]:
        if todo == 0:
            arr[last] = head
            yield from place(pool)
            return
        for i, x in enumerate(pool):
            arr[last] = x
            yield from fill(head, x, todo - 1, pool[:i] + pool[i + 1 :])

    yield from place(list(range(n)))


def _check_budget(lam: Partition, budget: int | None) -> int:
    budget = default_budget() if budget is None else budget
    size = class_size(lam)
    if size > budget:
        raise CapacityError(
            f"class [{lam}] has {size} elements, over the enumeration budget of {budget}"
        )
    return size


def enumerate_class(lam: Partition, budget: int | None = None) -> Iterator[Permutation]:
    """Every permutation of cycle type ``lam``, each exactly once."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("cannot enumerate the class of the empty partition")
    _check_budget(lam, budget)
    for arr in _enumerate0(lam):
        yield Permutation._from_zero_based(arr)


@lru_cache(maxsize=256)
def _row(target: tuple[int, ...], lam: Partition) -> Counter:
    # cycle types of s^-1 * g over s in C_lam, target g zero-based
    hist: Counter = Counter()
    n = len(target)
    inv = [0] * n
    for s in _enumerate0(lam):
        for i, x in enumerate(s):
            inv[x] = i
        hist[_cycle_type0([inv[g] for g in target])] += 1
    return hist


def bruteforce_row(
    nu: Partition, lam: Partition, budget: int | None = None, target: Permutation | None = None
) -> Counter:
    """Map each class mu to the count of factorizations g = s * t, s in C_lam, t in C_mu."""
    nu, lam = Partition(nu), Partition(lam)
    n = check_same_weight(nu, lam)
    g = canonical_representative(nu) if target is None else target
    if g.n != n or cycle_type(g) != nu:
        raise ValueError(f"target {g!r} is not of cycle type [{nu}]")
    _check_budget(lam, budget)
    counts = _row(tuple(x - 1 for x in g.images), lam)
    return Counter({Partition(mu): c for mu, c in counts.items()})


def count_bruteforce(
    nu: Partition,
    lam: Partition,
    mu: Partition,
    budget: int | None = None,
    target: Permutation | None = None,
) -> int:
    """Count pairs (s, t) with s*t = g, s of type ``lam``, t of type ``mu``.

    ``g`` is ``target`` if given, else the canonical representative of
    ``nu``. Only the smaller of the two classes is enumerated: counting
    (s, t) for g is the same as counting (t^-1, s^-1) for g^-1, and g^-1
    has type ``nu`` too.
    """
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    check_same_weight(nu, lam, mu)
    if class_size(mu) < class_size(lam):
        g = canonical_representative(nu) if target is None else target
        return bruteforce_row(nu, mu, budget, g.inverse())[lam]
    return bruteforce_row(nu, lam, budget, target)[mu]
