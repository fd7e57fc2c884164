"""Character-free characteristic polynomials from tabloid orbits.

The permutation module M^lam has the lam-tabloids as a basis and a permutation
pi just permutes them, so its characteristic polynomial is the product of
(x^L - 1) over the orbit lengths L of <pi>. Young's rule,
M^lam = sum_nu K(nu, lam) S^nu with K(lam, lam) = 1 and nu dominating lam,
then lets us peel off the Specht constituents one shape at a time. None of
this touches irreducible characters, so it certifies :mod:`unispecht.charpoly`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .charpoly import ConsistencyError, CycloProduct
from .partitions import (
    Partition,
    check_same_n,
    dominance_leq,
    enumerate_partitions,
    kostka,
    permutation_module_dimension,
)

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """More tabloids than the configured budget allows."""


@dataclass(frozen=True)
class OracleConfig:
    budget: int = DEFAULT_BUDGET
    max_n: int = 8


@dataclass(frozen=True)
class Tabloid:
    """Rows of a tabloid as sorted tuples; row order follows the shape."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(x for row in self.rows for x in row)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"tabloid rows must partition 1..n: {self.rows}")
        if any(tuple(sorted(row)) != row for row in self.rows):
            raise ValueError("tabloid rows must be stored sorted")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def act(self, perm: dict[int, int]) -> "Tabloid":
        return Tabloid(tuple(tuple(sorted(perm[x] for x in row)) for row in self.rows))


def class_representative(mu: Partition) -> dict[int, int]:
    """Permutation of 1..n with cycles of ``mu`` on consecutive integers, in part order."""
    perm: dict[int, int] = {}
    start = 1
    for part in mu:
        for i in range(part):
            perm[start + i] = start + (i + 1) % part
        start += part
    return perm


def tabloids(shape: Partition) -> list[Tabloid]:
    """Every tabloid of ``shape``, in lexicographic order of rows."""
    n = sum(shape)
    out: list[Tabloid] = []

    def fill(i: int, remaining: tuple[int, ...], rows: list[tuple[int, ...]]) -> None:
        if i == len(shape):
            out.append(Tabloid(tuple(rows)))
            return
        for row in combinations(remaining, shape[i]):
            chosen = set(row)
            fill(i + 1, tuple(x for x in remaining if x not in chosen), rows + [row])

    fill(0, tuple(range(1, n + 1)), [])
    return out


def _check_budget(lam: Partition, budget: int) -> None:
    size = permutation_module_dimension(lam)
    if size > budget:
        raise BudgetExceeded(f"M^{lam} has {size} tabloids, budget is {budget}")


@cache
def _tabloid_words(shape: Partition) -> tuple[tuple[int, ...], ...]:
    # word[j] is the index of the row holding j + 1; a canonical tabloid encoding
    n = sum(shape)
    words = []
    for tab in tabloids(shape):
        word = [0] * n
        for r, row in enumerate(tab.rows):
            for x in row:
                word[x - 1] = r
        words.append(tuple(word))
    return tuple(words)


@cache
def _orbit_lengths(lam: Partition, mu: Partition) -> tuple[int, ...]:
    perm = class_representative(mu)
    n = sum(lam)
    # pi sends word w to w' with w'[pi(j)] = w[j], i.e. w'[t] = w[inv[t]]
    inv = [0] * n
    for j in range(n):
        inv[perm[j + 1] - 1] = j
    seen: set[tuple[int, ...]] = set()
    lengths = []
    for start in _tabloid_words(lam):
        if start in seen:
            continue
        cur, length = start, 0
        while True:
            seen.add(cur)
            length += 1
            cur = tuple([cur[i] for i in inv])
            if cur == start:
                break
        lengths.append(length)
    return tuple(sorted(lengths))


def tabloid_orbit_lengths(lam: Partition, mu: Partition, budget: int = DEFAULT_BUDGET) -> Counter:
    """Multiset of <pi>-orbit lengths on lam-tabloids, pi of cycle type ``mu``."""
    check_same_n(lam, mu)
    lam, mu = Partition(lam), Partition(mu)
    _check_budget(lam, budget)
    return Counter(_orbit_lengths(lam, mu))


def perm_module_charpoly(lam: Partition, mu: Partition, budget: int = DEFAULT_BUDGET) -> CycloProduct:
    """Characteristic polynomial of class ``mu`` on M^lam, from tabloid orbits."""
    out = CycloProduct()
    for length, count in tabloid_orbit_lengths(lam, mu, budget).items():
        out = out * CycloProduct.x_pow_minus_one(length, count)
    return out


@cache
def _specht_oracle(lam: Partition, mu: Partition, budget: int) -> CycloProduct:
    shapes = enumerate_partitions(sum(lam))
    position = shapes.index(lam)
    result = perm_module_charpoly(lam, mu, budget)
    for nu in shapes[:position]:
        k = kostka(nu, lam)
        if not k:
            continue
        if not dominance_leq(lam, nu):
            raise ConsistencyError(f"Kostka({nu}, {lam}) = {k} but {nu} does not dominate {lam}")
        result = result.divide(_specht_oracle(nu, mu, budget) ** k)
    if kostka(lam, lam) != 1:
        raise ConsistencyError(f"Kostka({lam}, {lam}) != 1")
    return result


def specht_charpoly_oracle(lam: Partition, mu: Partition, budget: int = DEFAULT_BUDGET) -> CycloProduct:
    """Characteristic polynomial of class ``mu`` on S^lam by Young's-rule division.

    Shapes are processed in reverse-lexicographic order, which refines
    dominance; each M^nu for nu dominating ``lam`` must fit in ``budget``.
    """
    check_same_n(lam, mu)
    _check_budget(Partition(lam), budget)
    return _specht_oracle(Partition(lam), Partition(mu), budget)


def closed_form_lemma44(n: int) -> CycloProduct:
    """(x^(n-2) - 1)^((n-3)/2) (x^(2n-4) - 1) (x - 1) for odd n >= 5."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 5, got {n}")
    return (
        CycloProduct.x_pow_minus_one(n - 2, (n - 3) // 2)
        * CycloProduct.x_pow_minus_one(2 * n - 4)
        * CycloProduct.x_pow_minus_one(1)
    )


def char_div_factors(part: int) -> CycloProduct:
    """The factor of M^(n-2,2)'s polynomial guaranteed by a single cycle of length ``part``.

    Even part: (x^p - 1)^(p/2 - 1) (x^(p/2) - 1); odd part: (x^p - 1)^((p-1)/2).
    """
    if part < 2:
        raise ValueError(f"cycle length must be at least 2, got {part}")
    if part % 2 == 0:
        return CycloProduct.x_pow_minus_one(part, part // 2 - 1) * CycloProduct.x_pow_minus_one(part // 2)
    return CycloProduct.x_pow_minus_one(part, (part - 1) // 2)


def closed_form_transpositions(m: int) -> CycloProduct:
    """(x - 1)^m (x^2 - 1)^(m^2 - m): m disjoint transpositions on M^(2m-2,2)."""
    if m < 1:
        raise ValueError("m must be positive")
    return CycloProduct.x_pow_minus_one(1, m) * CycloProduct.x_pow_minus_one(2, m * m - m)
