"""Integer partitions as shapes and as cycle types.

A :class:`Partition` is a non-increasing tuple of positive integers. The same
type indexes Specht modules (shapes) and conjugacy classes of S_n (cycle
types); fixed points of a permutation appear as explicit 1-parts.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import cache
from math import factorial, gcd, lcm
from typing import Iterable, Iterator


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Equality and hashing are those of the underlying tuple, so
    ``Partition((3, 1)) == (3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a partition must have at least one part (n = 0 is rejected)")
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a literal such as ``"4,3,2,1"``, ``"2^2,1^3"`` or ``"(5,3)"``.

        Parts may be given in any order; the result is normalised.
        """
        body = text.strip().strip("()[]").replace(" ", "")
        if not body:
            raise ValueError("empty partition literal")
        parts: list[int] = []
        for token in body.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise ValueError(f"malformed partition token {token!r}")
            part = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) is not None else 1
            if part < 1:
                raise ValueError(f"malformed partition token {token!r}: parts must be positive")
            parts.extend([part] * mult)
        if not parts:
            raise ValueError(f"partition literal {text!r} has no parts")
        return cls.from_parts(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def check_same_n(a: Partition, b: Partition) -> None:
    if sum(a) != sum(b):
        raise ValueError(f"partitions of different n: {a} and {b}")


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first, *rest)


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [tuple(p) for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def conjugate(shape: Partition) -> Partition:
    if not shape:
        raise ValueError("empty partition")
    return Partition(sum(1 for part in shape if part >= j) for j in range(1, shape[0] + 1))


def class_parity(mu: Partition) -> int:
    """Sign of any permutation with cycle type ``mu``: +1 even, -1 odd."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def class_order(mu: Partition) -> int:
    return lcm(*mu)


def power_cycle_type(mu: Partition, k: int) -> Partition:
    """Cycle type of pi**k for pi of cycle type ``mu``.

    A cycle of length l splits into gcd(l, k) cycles of length l / gcd(l, k);
    ``k = 0`` gives the identity class.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    parts: list[int] = []
    for part in mu:
        g = gcd(part, k) if k else part
        parts.extend([part // g] * g)
    return Partition.from_parts(parts)


def even_part_count(mu: Partition) -> int:
    """Number of even parts of ``mu``; odd exactly when the class is odd."""
    return sum(1 for part in mu if part % 2 == 0)


def hook_lengths(shape: Partition) -> list[int]:
    conj = conjugate(shape)
    return [
        (row_len - j) + (conj[j] - i) - 1
        for i, row_len in enumerate(shape)
        for j in range(row_len)
    ]


@cache
def specht_dimension(shape: Partition) -> int:
    """Dimension f^shape of the Specht module via the hook length formula."""
    prod = 1
    for h in hook_lengths(shape):
        prod *= h
    q, r = divmod(factorial(sum(shape)), prod)
    assert r == 0, f"hook product does not divide n! for {shape}"
    return q


def permutation_module_dimension(shape: Partition) -> int:
    """n! / shape!, the number of tabloids of the given shape."""
    denom = 1
    for part in shape:
        denom *= factorial(part)
    return factorial(sum(shape)) // denom


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` dominates ``lam`` (every partial sum of lam <= mu's)."""
    check_same_n(lam, mu)
    s_lam = s_mu = 0
    for i in range(max(len(lam), len(mu))):
        s_lam += lam[i] if i < len(lam) else 0
        s_mu += mu[i] if i < len(mu) else 0
        if s_lam > s_mu:
            return False
    return True


@cache
def _horizontal_strip_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    # The cells holding the largest entry form a horizontal strip on the outer
    # rim; peel it off and recurse on the remaining content.
    if not content:
        return 1 if not shape else 0
    size = content[-1]
    rest = content[:-1]
    total = 0
    rows = len(shape)

    def peel(i: int, remaining: int, inner: list[int]) -> None:
        nonlocal total
        if i == rows:
            if remaining == 0:
                total += _horizontal_strip_count(tuple(p for p in inner if p), rest)
            return
        below = shape[i + 1] if i + 1 < rows else 0
        for take in range(min(remaining, shape[i] - below), -1, -1):
            inner.append(shape[i] - take)
            peel(i + 1, remaining - take, inner)
            inner.pop()

    peel(0, size, [])
    return total


def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content``.

    Entries weakly increase along rows and strictly down columns. Counted by
    depth-first peeling of horizontal strips, memoised on (shape, content).
    """
    check_same_n(shape, content)
    return _horizontal_strip_count(tuple(shape), tuple(content))


def hook_shape(n: int, k: int) -> Partition:
    """The Gamma-shaped partition (n - k, 1^k)."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"hook (n-k, 1^k) needs 0 <= k <= n-1, got n={n}, k={k}")
    return Partition((n - k,) + (1,) * k)
