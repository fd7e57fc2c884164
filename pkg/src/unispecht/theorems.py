"""Executable checks of the unisingularity results, plus explicit witnesses.

Each ``verify_*`` function sweeps a range of n and returns
:class:`TheoremReport` objects; a failing report carries the first
counterexample found (smallest n first, then enumeration order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .charpoly import (
    UnisingularVerdict,
    charpoly,
    fixed_space_dim,
    m_mu,
    minus_one_multiplicity,
    verdict,
)
from .oracle import (
    char_div_factors,
    closed_form_lemma44,
    closed_form_transpositions,
    perm_module_charpoly,
)
from .partitions import (
    Partition,
    class_parity,
    conjugate,
    enumerate_partitions,
    even_part_count,
    hook_shape,
)

OPEN_CASE = Partition((4, 3, 2, 1))


@dataclass(frozen=True)
class TheoremReport:
    name: str
    range: str
    passed: bool
    counterexample: tuple | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report passes exactly when it has no counterexample")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name} ({self.range})"
        if self.counterexample is not None:
            text += f": counterexample {self.counterexample}"
        return text


class _Failure(Exception):
    def __init__(self, *detail):
        super().__init__(detail)
        self.detail = detail


def _run(name: str, rng: str, body: Callable[[], Iterator[str] | None]) -> TheoremReport:
    try:
        notes = tuple(body() or ())
    except _Failure as exc:
        return TheoremReport(name, rng, False, exc.detail)
    return TheoremReport(name, rng, True, None, notes)


def _require(cond: bool, *detail) -> None:
    if not cond:
        raise _Failure(*detail)


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """k eigenvalues of a class-mu permutation on S^(n-1,1) whose product is 1.

    ``selections`` holds ``(part_index, exponent)`` pairs meaning
    z_{mu[part_index]} ** exponent for a primitive mu[part_index]-th root z.
    Exponent 0 stands for one copy of the eigenvalue 1, of which there are
    len(mu) - 1.
    """

    n: int
    k: int
    mu: Partition
    selections: tuple[tuple[int, int], ...]
    recipe: str
    recipe_gap: bool = False

    def product_exponent(self) -> Fraction:
        return sum((Fraction(e, self.mu[i]) for i, e in self.selections), Fraction(0))

    def exponents(self) -> list[int]:
        return [e for _, e in self.selections]


def witness_is_valid(w: Witness) -> bool:
    """Check the selection against the eigenvalue multiset in exact arithmetic."""
    if len(w.selections) != w.k:
        return False
    ones = [s for s in w.selections if s[1] == 0]
    if len(ones) > len(w.mu) - 1:
        return False
    others = [s for s in w.selections if s[1] != 0]
    if len(set(others)) != len(others):
        return False
    for i, e in others:
        if not (0 <= i < len(w.mu) and 1 <= e < w.mu[i]):
            return False
    return w.product_exponent().denominator == 1


def _check_hypotheses(n: int, k: int, mu: Partition) -> None:
    if n < 7:
        raise ValueError(f"witnesses need n >= 7, got n = {n}")
    if not 2 <= k <= (n - 1) // 2:
        raise ValueError(f"witnesses need 2 <= k <= floor((n-1)/2) = {(n - 1) // 2}, got k = {k}")
    if sum(mu) != n:
        raise ValueError(f"{mu} is not a partition of {n}")


def _recipe(n: int, k: int, mu: Partition) -> tuple[str, list[tuple[int, int]]]:
    r = len(mu)
    if r > k:
        return "case1", [(0, 0)] * k
    if r == 1:
        half = k // 2
        if k % 2 == 0:
            picks = [e for j in range(1, half + 1) for e in (j, n - j)]
        else:
            picks = [e for j in range(1, half) for e in (j, n - j)]
            picks += [half, half + 1, n - 2 * half - 1]
        return "case2", [(0, e) for e in picks]
    if r == k:
        return "case3", [(0, 1), (0, mu[0] - 1)] + [(0, 0)] * (k - 2)
    # r in [2, k-1]: conjugate pairs z^j, z^-j from the longest cycles, topped up
    # with ones; enough pairs exist because k + r + 2 <= n.
    pairs = [(i, j) for i, part in enumerate(mu) for j in range(1, (part - 1) // 2 + 1)]
    t = max(0, (k - (r - 1) + 1) // 2)
    chosen: list[tuple[int, int]] = []
    for i, j in pairs[:t]:
        chosen += [(i, j), (i, mu[i] - j)]
    return "case4", chosen + [(0, 0)] * (k - len(chosen))


def _search(n: int, k: int, mu: Partition) -> list[tuple[int, int]] | None:
    pool = [(0, 0)] * (len(mu) - 1) + [(i, e) for i, part in enumerate(mu) for e in range(1, part)]
    for combo in combinations(range(len(pool)), k):
        picks = [pool[c] for c in combo]
        if sum(Fraction(e, mu[i]) for i, e in picks).denominator == 1:
            return picks
    return None


def witness_subset(n: int, k: int, mu: Partition) -> Witness:
    """k eigenvalues of pi in class mu on S^(n-1,1) multiplying to 1.

    Built by the case recipe on the number of cycles r (r > k, r = 1, r = k,
    2 <= r < k). If a recipe ever produced an invalid selection, an exhaustive
    search supplies the witness and ``recipe_gap`` is set.
    """
    mu = Partition(mu)
    _check_hypotheses(n, k, mu)
    name, picks = _recipe(n, k, mu)
    w = Witness(n, k, mu, tuple(picks), name)
    if witness_is_valid(w):
        return w
    found = _search(n, k, mu)
    if found is None:
        raise ValueError(f"no witness exists for n={n}, k={k}, mu={mu}")
    return Witness(n, k, mu, tuple(found), "search", recipe_gap=True)


# -- verifiers ---------------------------------------------------------------


def _odd_classes(n: int):
    return [mu for mu in enumerate_partitions(n) if class_parity(mu) == -1]


def verify_gamma_family(n_max: int = 12) -> list[TheoremReport]:
    """Hook shapes (n-k, 1^k): which are unisingular, with witnesses for the wide ones."""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")

    def standard():
        for n in range(2, n_max + 1):
            v = verdict(hook_shape(n, 1))
            _require(not v.unisingular and (n,) in v.offending, hook_shape(n, 1), Partition((n,)), v.offending)

    def two_one():
        for n in range(3, n_max + 1):
            v = verdict(hook_shape(n, n - 2))
            _require(v.unisingular == (n % 2 == 0), hook_shape(n, n - 2), v.offending, "expected unisingular iff n even")
            if n % 2:
                _require((n,) in v.offending, hook_shape(n, n - 2), Partition((n,)), "n-cycle should offend")

    def middle_hooks():
        for n in range(5, n_max + 1):
            for k in range(2, n - 2):
                v = verdict(hook_shape(n, k))
                _require(v.unisingular, hook_shape(n, k), v.offending)

    def wide(lo: Callable[[int], int], hi: Callable[[int], int]):
        def body():
            for n in range(7, n_max + 1):
                for k in range(lo(n), hi(n) + 1):
                    v = verdict(hook_shape(n, k))
                    _require(v.unisingular, hook_shape(n, k), v.offending)
        return body

    def witnesses():
        gaps = 0
        count = 0
        for n in range(7, n_max + 1):
            for k in range(2, (n - 1) // 2 + 1):
                for mu in enumerate_partitions(n):
                    w = witness_subset(n, k, mu)
                    count += 1
                    _require(witness_is_valid(w), (n, k), mu, w.selections)
                    gaps += w.recipe_gap
        yield f"{count} witnesses checked, {gaps} needed search"

    rng = f"n <= {n_max}"
    return [
        _run("standard module never unisingular", f"2 <= {rng}", standard),
        _run("(2,1^(n-2)) unisingular iff n even", f"3 <= {rng}", two_one),
        _run("hooks (n-k,1^k), 2 <= k <= n-3, unisingular", f"5 <= {rng}", middle_hooks),
        _run("wide hooks 2 <= k <= floor((n-1)/2) unisingular", f"7 <= {rng}", wide(lambda n: 2, lambda n: (n - 1) // 2)),
        _run("tall hooks floor((n+1)/2) <= k <= n-3 unisingular", f"7 <= {rng}", wide(lambda n: (n + 1) // 2, lambda n: n - 3)),
        _run("subset-product witnesses valid", f"7 <= {rng}", witnesses),
    ]


def verify_theorem_13(n_max: int = 12) -> TheoremReport:
    """(2,2,1^(n-4)) is unisingular iff n is even, checked with the (n-2,2) reduction."""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")

    def body():
        for n in range(5, n_max + 1):
            lam = Partition((2, 2) + (1,) * (n - 4))
            two_row = Partition((n - 2, 2))
            v = verdict(lam)
            _require(v.unisingular == (n % 2 == 0), lam, v.offending, "expected unisingular iff n even")
            if n % 2:
                _require(v.offending == (two_row,), lam, v.offending, "expected the single offender (n-2,2)")
                big = perm_module_charpoly(two_row, two_row)
                _require(big.multiplicity(2) == 1 == even_part_count(two_row), two_row, two_row, big)
            for mu in _odd_classes(n):
                big = perm_module_charpoly(two_row, mu)
                c_mu = charpoly(two_row, mu)
                _require(big == c_mu * m_mu(mu), two_row, mu, "M_mu != c_mu * m_mu")
                reduced = big.multiplicity(2) > even_part_count(mu)
                has_minus_one = minus_one_multiplicity(two_row, mu) >= 1
                _require(reduced == has_minus_one, two_row, mu, "reduction criterion disagrees")
                _require(has_minus_one == (fixed_space_dim(lam, mu) >= 1), lam, mu, "sign switch disagrees")
                if n % 2 == 0 or mu != two_row:
                    _require(has_minus_one, two_row, mu, "odd class without eigenvalue -1")

    return _run("(2,2,1^(n-4)) unisingular iff n even", f"5 <= n <= {n_max}", body)


def verify_permutation_lemmas(n_max: int = 9) -> list[TheoremReport]:
    """Closed forms for M^(n-2,2) read off from explicit tabloid orbits."""

    def two_row_orbits():
        for n in (5, 7, 9, 11):
            shape = Partition((n - 2, 2))
            got = perm_module_charpoly(shape, shape)
            _require(got == closed_form_lemma44(n), shape, shape, got)

    def cycle_factors():
        for n in range(4, n_max + 1):
            shape = Partition((n - 2, 2))
            for mu in enumerate_partitions(n):
                big = perm_module_charpoly(shape, mu)
                for part in set(mu):
                    if part >= 2:
                        _require(char_div_factors(part).divides(big), shape, mu, part)

    def transpositions():
        for m in (1, 3, 5):
            shape = Partition.from_parts(p for p in (2 * m - 2, 2) if p)
            mu = Partition((2,) * m)
            got = perm_module_charpoly(shape, mu)
            _require(got == closed_form_transpositions(m), shape, mu, got)

    return [
        _run("M^(n-2,2) on class (n-2,2), n odd", "n in {5,...,11}", two_row_orbits),
        _run("cycle factors divide M^(n-2,2) polynomial", f"4 <= n <= {n_max}", cycle_factors),
        _run("m transpositions on M^(2m-2,2)", "m in {1,3,5}", transpositions),
    ]


def verify_e_mu_lemma(n_max: int = 12) -> TheoremReport:
    """For odd classes, -1 is a root of m_mu exactly E(mu) times, and E(mu) is odd."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")

    def body():
        for n in range(2, n_max + 1):
            for mu in _odd_classes(n):
                e = even_part_count(mu)
                _require(e % 2 == 1, mu, e, "E(mu) even on an odd class")
                _require(m_mu(mu).multiplicity(2) == e, mu, m_mu(mu), e)

    return _run("multiplicity of -1 in m_mu equals E(mu)", f"2 <= n <= {n_max}", body)


def verify_single_offender(n_max: int = 10) -> TheoremReport:
    """Every non-unisingular S^lam other than the sign module has one offending class.

    This is an observation on small n, reported rather than assumed.
    """

    def body():
        for n in range(2, n_max + 1):
            sign = Partition((1,) * n)
            for lam in enumerate_partitions(n):
                v = verdict(lam)
                if v.unisingular:
                    continue
                if lam == sign:
                    yield f"n={n}: sign module has {len(v.offending)} offending classes"
                    continue
                _require(len(v.offending) == 1, lam, v.offending)

    return _run("exactly one offending class", f"2 <= n <= {n_max}", body)


def verify_sign_twist(n_max: int = 8) -> TheoremReport:
    """Fixed spaces on S^lam and S^lam' agree on even classes; on odd classes 1 <-> -1."""

    def body():
        for n in range(2, n_max + 1):
            for lam in enumerate_partitions(n):
                conj = conjugate(lam)
                for mu in enumerate_partitions(n):
                    if class_parity(mu) == 1:
                        _require(fixed_space_dim(lam, mu) == fixed_space_dim(conj, mu), lam, mu)
                    else:
                        _require(
                            (fixed_space_dim(lam, mu) >= 1) == (minus_one_multiplicity(conj, mu) >= 1), lam, mu
                        )
            hook = hook_shape(n, n - 2)
            for mu in _odd_classes(n):
                _require(minus_one_multiplicity(hook, mu) >= len(mu) - 1, hook, mu, "fewer than r-1 eigenvalues -1")

    return _run("sign twist swaps eigenvalues 1 and -1 on odd classes", f"2 <= n <= {n_max}", body)


def resolve_open_case() -> UnisingularVerdict:
    """Verdict for the 768-dimensional S^(4,3,2,1), from characters alone."""
    return verdict(OPEN_CASE)


SUITES = ("gamma", "theorem13", "emu", "single-offender", "all")


def run_suite(suite: str, max_n: int | None = None) -> list[TheoremReport]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    reports: list[TheoremReport] = []
    if suite in ("gamma", "all"):
        reports += verify_gamma_family(max(5, max_n or 12))
    if suite in ("theorem13", "all"):
        reports.append(verify_theorem_13(max(5, max_n or 12)))
        reports += verify_permutation_lemmas(min(9, max_n or 9))
        reports.append(verify_sign_twist(min(8, max_n or 8)))
    if suite in ("emu", "all"):
        reports.append(verify_e_mu_lemma(max(2, max_n or 12)))
    if suite in ("single-offender", "all"):
        reports.append(verify_single_offender(max(2, max_n or 10)))
    return reports
