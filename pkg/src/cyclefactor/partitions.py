"""Integer partitions and the conjugacy-class data of S_n they index."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import ConsistencyError, PartitionParseError


class Partition(tuple):
    """A partition stored as a weakly decreasing tuple of positive parts.

    Construction normalizes the order, so ``Partition([1, 3, 1])`` equals
    ``Partition([3, 1, 1])``. The empty partition is the partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part size i to its multiplicity alpha_i."""
        return dict(Counter(self))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def format_partition(lam: Iterable[int]) -> str:
    """Render a partition as ``"3,1,1"``."""
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    """Parse comma separated positive parts in any order.

    >>> parse_partition("1, 3,1")
    Partition([3, 1, 1])
    """
    if not text or not text.strip():
        raise PartitionParseError("empty partition text", token=text)
    parts = []
    for raw in text.split(","):
        token = raw.strip()
        if not token.isdigit():
            raise PartitionParseError(f"invalid partition part {token!r}", token=token)
        value = int(token)
        if value < 1:
            raise PartitionParseError(f"partition part must be positive, got {token!r}", token=token)
        parts.append(value)
    return Partition(parts)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    ``partitions_of(4)`` is ``[4], [3,1], [2,2], [2,1,1], [1,1,1,1]``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """Centralizer order prod_i alpha_i! * i**alpha_i."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= factorial(mult) * part**mult
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type ``lam``, i.e. n!/z_lambda."""
    size, rem = divmod(factorial(sum(lam)), z_lambda(lam))
    if rem:
        raise ConsistencyError(f"n!/z is not an integer for {lam!r}")
    return size


def is_hook(rho: Partition) -> tuple[bool, int | None]:
    """Return ``(True, r)`` if ``rho == (n - r, 1**r)``, else ``(False, None)``."""
    if not rho:
        return False, None
    if all(p == 1 for p in rho[1:]):
        return True, len(rho) - 1
    return False, None


def hook_partition(n: int, r: int) -> Partition:
    """The hook shape (n - r, 1**r)."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"hook leg r={r} out of range for n={n}")
    return Partition((n - r,) + (1,) * r)


def check_same_weight(*lams: Partition) -> int:
    """Return the common weight n >= 1 of the given partitions."""
    weights = {sum(lam) for lam in lams}
    if len(weights) != 1:
        shown = ", ".join(f"[{format_partition(lam)}]" for lam in lams)
        raise ValueError(f"partitions have different weights: {shown}")
    n = weights.pop()
    if n < 1:
        raise ValueError("counting requires partitions of n >= 1")
    return n
