"""Characteristic polynomials of permutations on Specht modules.

Every polynomial here is a product of cyclotomic polynomials, stored as a
multiplicity map ``{d: a_d}`` (:class:`CycloProduct`). For pi of cycle type mu
acting on S^lam the multiplicities are recovered from fixed-space dimensions
of the powers pi^d, each an average of character values over <pi^d>:

    dim ker(pi^d - 1) = sum_{e | d} a_e * phi(e)

which is triangular in the divisor order.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd
from typing import Iterable, Mapping

from .characters import mn_character
from .partitions import (
    Partition,
    check_same_n,
    class_order,
    class_parity,
    conjugate,
    enumerate_partitions,
    power_cycle_type,
    specht_dimension,
)

REPORT_VERSION = "1"


class ConsistencyError(AssertionError):
    """An exact identity failed; only an implementation bug can cause this."""


@cache
def totient(d: int) -> int:
    if d < 1:
        raise ValueError("totient is defined for positive integers")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact_monic(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    if any(num[: len(den) - 1]):
        raise ConsistencyError("inexact polynomial division")
    return q


@cache
def cyclotomic_coefficients(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, lowest degree first."""
    poly = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        poly = _poly_divexact_monic(poly, list(cyclotomic_coefficients(e)))
    return tuple(poly)


class CycloProduct:
    """A product of cyclotomic polynomials, prod_d Phi_d ** a_d.

    Immutable; zero multiplicities are never stored. Multiplication adds
    multiplicity maps and :meth:`divide` subtracts them, refusing to go negative.
    """

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        clean: dict[int, int] = {}
        for d, a in items:
            d, a = int(d), int(a)
            if d < 1:
                raise ValueError(f"cyclotomic index must be positive, got {d}")
            if a < 0:
                raise ValueError(f"negative multiplicity {a} for Phi_{d}")
            if a:
                clean[d] = clean.get(d, 0) + a
        self._factors = dict(sorted(clean.items()))
        self._hash = hash(tuple(self._factors.items()))

    @classmethod
    def x_pow_minus_one(cls, length: int, power: int = 1) -> "CycloProduct":
        """(x**length - 1) ** power."""
        return cls({d: power for d in divisors(length)})

    @classmethod
    def from_roots(cls, roots: Iterable[Fraction]) -> "CycloProduct":
        """Build from roots of unity given as exponents exp(2*pi*i*q), q in [0, 1).

        Raises if the multiset is not closed under Galois conjugation.
        """
        counts: dict[Fraction, int] = {}
        for q in roots:
            q = Fraction(q) % 1
            counts[q] = counts.get(q, 0) + 1
        by_order: dict[int, list[int]] = {}
        for q, c in counts.items():
            by_order.setdefault(q.denominator, []).append(c)
        factors = {}
        for d, cs in by_order.items():
            if len(cs) != totient(d) or len(set(cs)) != 1:
                raise ValueError(f"root multiset is not a product of cyclotomic polynomials (order {d})")
            factors[d] = cs[0]
        return cls(factors)

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def multiplicity(self, d: int) -> int:
        return self._factors.get(d, 0)

    @property
    def degree(self) -> int:
        return sum(a * totient(d) for d, a in self._factors.items())

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        merged = dict(self._factors)
        for d, a in other._factors.items():
            merged[d] = merged.get(d, 0) + a
        return CycloProduct(merged)

    def __pow__(self, k: int) -> "CycloProduct":
        return CycloProduct({d: a * k for d, a in self._factors.items()})

    def divides(self, other: "CycloProduct") -> bool:
        return all(other.multiplicity(d) >= a for d, a in self._factors.items())

    def divide(self, other: "CycloProduct") -> "CycloProduct":
        """Exact quotient self / other; raises ConsistencyError if not divisible."""
        if not other.divides(self):
            raise ConsistencyError(f"{other} does not divide {self}")
        return CycloProduct({d: a - other.multiplicity(d) for d, a in self._factors.items()})

    __truediv__ = divide

    def roots(self) -> list[Fraction]:
        """Root multiset as exponents q with root exp(2*pi*i*q)."""
        out = []
        for d, a in self._factors.items():
            prim = [Fraction(j, d) for j in range(d) if gcd(j, d) == 1]
            out.extend(prim * a)
        return out

    def expand(self) -> list[int]:
        """Integer coefficients, lowest degree first."""
        poly = [1]
        for d, a in self._factors.items():
            for _ in range(a):
                poly = _poly_mul(poly, list(cyclotomic_coefficients(d)))
        return poly

    def __call__(self, x):
        value = 1
        for d, a in self._factors.items():
            coeffs = cyclotomic_coefficients(d)
            phi = 0
            for c in reversed(coeffs):
                phi = phi * x + c
            value *= phi**a
        return value

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloProduct):
            return self._factors == other._factors
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CycloProduct({self._factors!r})"

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        terms = []
        for d, a in self._factors.items():
            terms.append(f"Phi_{d}" if a == 1 else f"Phi_{d}^{a}")
        return " * ".join(terms)


def format_coefficients(coeffs: list[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def m_mu(mu: Partition) -> CycloProduct:
    """Characteristic polynomial of pi in class mu on M^(n-1,1): prod_j (x^mu_j - 1)."""
    out = CycloProduct()
    for part in mu:
        out = out * CycloProduct.x_pow_minus_one(part)
    return out


def standard_charpoly(mu: Partition) -> CycloProduct:
    """Characteristic polynomial of class mu on the standard module S^(n-1,1)."""
    if sum(mu) < 2:
        raise ValueError("the standard module of S_1 has dimension zero")
    return m_mu(mu).divide(CycloProduct({1: 1}))


def fixed_space_dim(lam: Partition, mu: Partition) -> int:
    """Multiplicity of eigenvalue 1 of class mu on S^lam (character average over <pi>)."""
    check_same_n(lam, mu)
    return _fixed_space_dim(Partition(lam), Partition(mu))


@cache
def _fixed_space_dim(lam: Partition, mu: Partition) -> int:
    m = class_order(mu)
    total = sum(mn_character(lam, power_cycle_type(mu, k)) for k in range(m))
    q, r = divmod(total, m)
    if r:
        raise ConsistencyError(f"non-integral fixed-space dimension {total}/{m} for {lam}, {mu}")
    return q


def charpoly(lam: Partition, mu: Partition) -> CycloProduct:
    """Cyclotomic factorisation of the characteristic polynomial of class mu on S^lam."""
    check_same_n(lam, mu)
    return _charpoly(Partition(lam), Partition(mu))


@cache
def _charpoly(lam: Partition, mu: Partition) -> CycloProduct:
    mults: dict[int, int] = {}
    for d in divisors(class_order(mu)):
        fix = fixed_space_dim(lam, power_cycle_type(mu, d))
        rest = fix - sum(a * totient(e) for e, a in mults.items() if d % e == 0)
        a_d, r = divmod(rest, totient(d))
        if r or a_d < 0:
            raise ConsistencyError(f"bad multiplicity {rest}/{totient(d)} of Phi_{d} for {lam}, {mu}")
        mults[d] = a_d
    out = CycloProduct(mults)
    if out.degree != specht_dimension(lam):
        raise ConsistencyError(f"degree {out.degree} != dimension {specht_dimension(lam)} for {lam}, {mu}")
    return out


def negate_roots(p: CycloProduct) -> CycloProduct:
    """The product whose roots are the negatives of p's roots (x -> -x up to sign)."""
    out: dict[int, int] = {}
    for d, a in p.factors.items():
        if d % 2:
            image = 2 * d
        elif d % 4 == 2:
            image = d // 2
        else:
            image = d
        out[image] = out.get(image, 0) + a
    return CycloProduct(out)


def minus_one_multiplicity(lam: Partition, mu: Partition) -> int:
    return charpoly(lam, mu).multiplicity(2)


@dataclass(frozen=True)
class UnisingularVerdict:
    lam: Partition
    unisingular: bool
    offending: tuple[Partition, ...]
    dimension: int

    def __post_init__(self):
        if self.unisingular != (not self.offending):
            raise ValueError("unisingular must hold exactly when no class offends")

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "dimension": self.dimension,
            "unisingular": self.unisingular,
            "offending": [list(mu) for mu in self.offending],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "UnisingularVerdict":
        return cls(
            lam=Partition(data["lambda"]),
            unisingular=bool(data["unisingular"]),
            offending=tuple(Partition(mu) for mu in data["offending"]),
            dimension=int(data["dimension"]),
        )


def _verdict(lam: Partition, classes: Iterable[Partition]) -> UnisingularVerdict:
    offending = tuple(mu for mu in classes if fixed_space_dim(lam, mu) == 0)
    return UnisingularVerdict(lam, not offending, offending, specht_dimension(lam))


def verdict(lam: Partition) -> UnisingularVerdict:
    """Decide unisingularity of S^lam over S_n, collecting every offending class."""
    lam = Partition(lam)
    if lam.n < 2:
        raise ValueError("unisingularity is only decided for n >= 2")
    return _verdict(lam, enumerate_partitions(lam.n))


def verdict_alternating(lam: Partition) -> UnisingularVerdict:
    """As :func:`verdict`, but over A_n: only even classes are tested.

    The restriction is treated as one (possibly reducible) module.
    """
    lam = Partition(lam)
    if lam.n < 3:
        raise ValueError("the alternating verdict needs n >= 3")
    return _verdict(lam, (mu for mu in enumerate_partitions(lam.n) if class_parity(mu) == 1))


def family_shapes(n: int) -> set[Partition]:
    """Shapes whose non-unisingularity is explained by a known family.

    (1^n) and (n-1,1) always; for odd n also (2,1^(n-2)) and (2,2,1^(n-4)).
    """
    fams = {Partition((1,) * n), Partition((n - 1, 1))}
    if n % 2 == 1:
        if n >= 3:
            fams.add(Partition((2,) + (1,) * (n - 2)))
        if n >= 5:
            fams.add(Partition((2, 2) + (1,) * (n - 4)))
    return fams


@dataclass(frozen=True)
class ScanReport:
    n: int
    verdicts: tuple[UnisingularVerdict, ...]
    version: str = REPORT_VERSION

    @property
    def partition_count(self) -> int:
        return len(self.verdicts)

    @property
    def unisingular_count(self) -> int:
        return sum(v.unisingular for v in self.verdicts)

    @property
    def non_unisingular(self) -> tuple[UnisingularVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.unisingular)

    @property
    def exceptional(self) -> tuple[UnisingularVerdict, ...]:
        fams = family_shapes(self.n)
        return tuple(v for v in self.non_unisingular if v.lam not in fams)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "n": self.n,
            "partition_count": self.partition_count,
            "unisingular_count": self.unisingular_count,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "exceptional": [
                {"lambda": list(v.lam), "offending": [list(mu) for mu in v.offending]}
                for v in self.exceptional
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ScanReport":
        if str(data.get("version")) != REPORT_VERSION:
            raise ValueError(f"unsupported report version {data.get('version')!r}")
        report = cls(
            n=int(data["n"]),
            verdicts=tuple(UnisingularVerdict.from_dict(v) for v in data["verdicts"]),
        )
        if report.partition_count != data["partition_count"] or report.unisingular_count != data["unisingular_count"]:
            raise ValueError("report counts disagree with its verdicts")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ScanConfig:
    min_n: int = 2
    max_n: int = 16
    jobs: int = 1

    def check(self, n: int) -> None:
        if not self.min_n <= n <= self.max_n:
            raise ValueError(f"n = {n} outside the configured scan range [{self.min_n}, {self.max_n}]")


def scan(n: int, config: ScanConfig = ScanConfig(), verdicts: Mapping[Partition, UnisingularVerdict] | None = None) -> ScanReport:
    """Verdicts for every shape of n, in :func:`enumerate_partitions` order.

    ``verdicts`` may supply precomputed results (e.g. from a cache); the rest
    are computed, in worker processes when ``config.jobs > 1``.
    """
    config.check(n)
    shapes = enumerate_partitions(n)
    known = dict(verdicts or {})
    todo = [lam for lam in shapes if lam not in known]
    if config.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for lam, v in zip(todo, pool.map(verdict, todo)):
                known[lam] = v
    else:
        for lam in todo:
            known[lam] = verdict(lam)
    return ScanReport(n=n, verdicts=tuple(known[lam] for lam in shapes))


def sign_twist(lam: Partition, mu: Partition) -> CycloProduct:
    """Characteristic polynomial of class mu on S^lam tensor sgn, from S^lam's."""
    p = charpoly(lam, mu)
    return p if class_parity(mu) == 1 else negate_roots(p)

