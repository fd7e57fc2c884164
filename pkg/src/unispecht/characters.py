"""Irreducible and permutation characters of the symmetric group.

Irreducible characters come from the Murnaghan-Nakayama rule evaluated on
beta-sets (first-column hook lengths): removing a border strip of length k is
moving one bead from position b to b - k, and the strip's height is the number
of beads jumped over. Values are exact Python integers.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition, check_same_n


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    r = len(shape)
    return tuple(part + (r - 1 - i) for i, part in enumerate(shape))


def _shape_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    r = len(beta)
    parts = [b - (r - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


def border_strip_removals(shape: tuple[int, ...], length: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip of ``length`` cells from ``shape``.

    Returns ``(smaller_shape, height)`` pairs, height being rows spanned minus one.
    """
    beta = _beta_set(shape)
    occupied = set(beta)
    out = []
    for i, b in enumerate(beta):
        target = b - length
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = sorted((c if j != i else target for j, c in enumerate(beta)), reverse=True)
        out.append((_shape_from_beta(tuple(moved)), height))
    return out


@cache
def _mn(shape: tuple[int, ...], cls: tuple[int, ...]) -> int:
    if not cls:
        return 1 if not shape else 0
    first, rest = cls[0], cls[1:]
    total = 0
    for smaller, height in border_strip_removals(shape, first):
        value = _mn(smaller, rest)
        if value:
            total += -value if height % 2 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """The irreducible character of S_n indexed by ``lam`` on class ``mu``.

    The recursion removes the largest part of ``mu`` first; results are memoised
    on (remaining shape, remaining class).
    """
    check_same_n(lam, mu)
    return _mn(tuple(lam), tuple(mu))


def character_cache_info():
    return _mn.cache_info()


@cache
def _distribute(cycles: tuple[int, ...], capacities: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not any(capacities) else 0
    head, rest = cycles[0], cycles[1:]
    total = 0
    for i, cap in enumerate(capacities):
        if cap >= head:
            total += _distribute(rest, capacities[:i] + (cap - head,) + capacities[i + 1:])
    return total


def permutation_character(lam: Partition, mu: Partition) -> int:
    """Trace of a permutation of cycle type ``mu`` on the permutation module M^lam.

    Counts fixed tabloids: each cycle must lie inside one row, so this is the
    number of ways to place the (distinguishable) cycles into rows with every
    row filled exactly.
    """
    check_same_n(lam, mu)
    return _distribute(tuple(mu), tuple(lam))
