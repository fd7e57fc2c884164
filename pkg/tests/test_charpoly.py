import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import explicit_specht_charpoly, exterior_power_roots, standard_roots
from strategies import partition_pairs, partitions
from unispecht.charpoly import (
    ConsistencyError,
    CycloProduct,
    ScanConfig,
    ScanReport,
    UnisingularVerdict,
    charpoly,
    cyclotomic_coefficients,
    family_shapes,
    fixed_space_dim,
    format_coefficients,
    m_mu,
    minus_one_multiplicity,
    negate_roots,
    scan,
    sign_twist,
    standard_charpoly,
    totient,
    verdict,
    verdict_alternating,
)
from unispecht.partitions import Partition, conjugate, enumerate_partitions, hook_shape, specht_dimension

P = Partition
X = sympy.Symbol("x")

cyclo = st.dictionaries(st.integers(1, 30), st.integers(0, 3), max_size=5).map(CycloProduct)


def _sympy(p: CycloProduct):
    return sympy.Poly(p.expand()[::-1], X)


# -- CycloProduct --------------------------------------------------------------


def test_str_and_order():
    assert str(CycloProduct({15: 1, 3: 1, 5: 1})) == "Phi_3 * Phi_5 * Phi_15"
    assert str(CycloProduct({1: 2, 2: 1})) == "Phi_1^2 * Phi_2"
    assert str(CycloProduct()) == "1"


def test_rejects_bad_factors():
    with pytest.raises(ValueError):
        CycloProduct({0: 1})
    with pytest.raises(ValueError):
        CycloProduct({3: -1})


def test_division():
    a = CycloProduct({1: 2, 3: 1})
    assert a / CycloProduct({1: 1}) == CycloProduct({1: 1, 3: 1})
    with pytest.raises(ConsistencyError):
        a / CycloProduct({2: 1})


def test_x_pow_minus_one():
    assert CycloProduct.x_pow_minus_one(6) == CycloProduct({1: 1, 2: 1, 3: 1, 6: 1})
    assert CycloProduct.x_pow_minus_one(7, 3).expand() == _sympy_coeffs((X**7 - 1) ** 3)


def _sympy_coeffs(expr):
    return [int(c) for c in sympy.Poly(expr, X).all_coeffs()[::-1]]


@pytest.mark.parametrize("d", range(1, 40))
def test_cyclotomic_coefficients_match_sympy(d):
    assert list(cyclotomic_coefficients(d)) == _sympy_coeffs(sympy.cyclotomic_poly(d, X))
    assert totient(d) == sympy.totient(d)


@given(cyclo, cyclo)
def test_product_is_polynomial_product(a, b):
    assert _sympy(a * b) == _sympy(a) * _sympy(b)
    assert (a * b).degree == a.degree + b.degree


@given(cyclo, st.integers(-3, 3))
def test_evaluate_matches_expansion(p, x):
    assert p(x) == _sympy(p).eval(x)


@given(cyclo)
def test_roots_round_trip(p):
    assert CycloProduct.from_roots(p.roots()) == p
    assert len(p.roots()) == p.degree


def test_from_roots_rejects_partial_orbit():
    with pytest.raises(ValueError):
        CycloProduct.from_roots([Fraction(1, 3)])


def test_format_coefficients():
    assert format_coefficients(CycloProduct({1: 1, 2: 1}).expand()) == "x^2 - 1"
    assert format_coefficients(CycloProduct({3: 1}).expand()) == "x^2 + x + 1"
    assert format_coefficients(CycloProduct({1: 2}).expand()) == "x^2 - 2*x + 1"


# -- negate_roots --------------------------------------------------------------


def test_negate_examples():
    assert negate_roots(CycloProduct({1: 1, 4: 1})) == CycloProduct({2: 1, 4: 1})
    assert negate_roots(CycloProduct({3: 1, 5: 1, 15: 1})) == CycloProduct({6: 1, 10: 1, 30: 1})


@given(cyclo)
def test_negate_is_substitution(p):
    q = negate_roots(p)
    assert negate_roots(q) == p
    sign = (-1) ** p.degree
    assert _sympy(q) == sympy.Poly(sign * _sympy(p).as_expr().subs(X, -X), X)


# -- module polynomials ----------------------------------------------------------


def test_m_mu_examples():
    assert m_mu(P((5, 3))) == CycloProduct({1: 2, 3: 1, 5: 1})
    assert m_mu(P((1,) * 6)) == CycloProduct({1: 6})
    assert m_mu(P((6,))) == CycloProduct({1: 1, 2: 1, 3: 1, 6: 1})


def test_standard_examples():
    assert standard_charpoly(P((5,))) == CycloProduct({5: 1})
    assert standard_charpoly(P((5,))).expand() == [1] * 5
    assert standard_charpoly(P((1,) * 7)) == CycloProduct({1: 6})
    assert standard_charpoly(P((5, 3))) == CycloProduct({1: 1, 3: 1, 5: 1})


@pytest.mark.parametrize(
    "lam,mu,dim",
    [
        ((3, 2), (2, 2, 1), 3),
        ((7, 1), (5, 3), 1),
        ((5,), (3, 2), 1),
        ((4, 3, 2, 1), (1,) * 10, 768),
        ((2, 2, 2), (3, 2, 1), 0),
        ((2, 2, 2), (6,), 2),
        ((2, 2), (3, 1), 0),
    ],
)
def test_fixed_space_dim(lam, mu, dim):
    assert fixed_space_dim(P(lam), P(mu)) == dim


@pytest.mark.parametrize(
    "lam,mu,factors",
    [
        ((4, 4), (5, 3), {3: 1, 5: 1, 15: 1}),
        ((2, 1, 1), (4,), {1: 1, 4: 1}),
        ((5,), (3, 2), {1: 1}),
        ((7, 1), (5, 3), {1: 1, 3: 1, 5: 1}),
        ((5, 1), (6,), {2: 1, 3: 1, 6: 1}),
        # disputed published values, settled by explicit polytabloid matrices below
        ((2, 2), (3, 1), {3: 1}),
        ((2, 2, 2), (6,), {1: 2, 2: 1, 3: 1}),
        ((2, 2, 2), (3, 2, 1), {2: 1, 3: 1, 6: 1}),
    ],
)
def test_charpoly_values(lam, mu, factors):
    assert charpoly(P(lam), P(mu)) == CycloProduct(factors)


@pytest.mark.parametrize("lam,mu", [((2, 2), (3, 1)), ((2, 2, 2), (6,)), ((2, 2, 2), (3, 2, 1)), ((3, 3), (6,))])
def test_disputed_cases_by_explicit_matrices(lam, mu):
    assert explicit_specht_charpoly(lam, mu) == charpoly(P(lam), P(mu))


@pytest.mark.parametrize("n", range(2, 6))
def test_charpoly_matches_explicit_polytabloids(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert charpoly(lam, mu) == explicit_specht_charpoly(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(2, 11))
def test_standard_module_agrees(n):
    for mu in enumerate_partitions(n):
        assert charpoly(hook_shape(n, 1), mu) == standard_charpoly(mu)
        assert m_mu(mu) == standard_charpoly(mu) * CycloProduct({1: 1})


@given(partition_pairs(2, 10))
def test_degree_and_fixed_space(pair):
    lam, mu = pair
    p = charpoly(lam, mu)
    assert p.degree == specht_dimension(lam)
    assert p.multiplicity(1) == fixed_space_dim(lam, mu)


@given(partition_pairs(2, 8))
def test_sign_twist_matches_conjugate(pair):
    lam, mu = pair
    assert sign_twist(lam, mu) == charpoly(conjugate(lam), mu)


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.integers(1, n - 2), st.sampled_from(enumerate_partitions(n)))))
def test_hooks_are_exterior_powers(args):
    k, mu = args
    n = mu.n
    expected = CycloProduct.from_roots(exterior_power_roots(standard_roots(mu), k))
    assert charpoly(hook_shape(n, k), mu) == expected


@pytest.mark.parametrize(
    "lam,mu,mult", [((3, 2), (3, 2), 0), ((4, 1), (3, 2), 1), ((5,), (3, 2), 0), ((5, 2), (7,), 0)]
)
def test_minus_one_multiplicity(lam, mu, mult):
    assert minus_one_multiplicity(P(lam), P(mu)) == mult


def test_three_two_class_has_no_minus_one_on_s32():
    # this is why (2,2,1) fails: twisting by sign turns the missing -1 into a missing 1
    assert explicit_specht_charpoly((3, 2), (3, 2)) == CycloProduct({1: 1, 3: 1, 6: 1})
    assert fixed_space_dim(P((2, 2, 1)), P((3, 2))) == 0


# -- verdicts and reports --------------------------------------------------------


def test_verdict_examples():
    assert verdict(P((4, 4))).offending == (P((5, 3)),)
    assert verdict(P((2, 2, 2, 2, 2))).offending == (P((5, 3, 2)),)
    assert verdict(P((6,))).unisingular
    assert verdict(P((2, 2, 2))).offending == (P((3, 2, 1)),)
    assert verdict(P((2, 2))).offending == (P((3, 1)),)
    with pytest.raises(ValueError):
        verdict(P((1,)))


def test_verdict_invariant():
    with pytest.raises(ValueError):
        UnisingularVerdict(P((3,)), True, (P((3,)),), 1)


def test_alternating_examples():
    assert verdict_alternating(P((5, 1))).unisingular
    assert not verdict(P((5, 1))).unisingular
    assert verdict_alternating(P((4, 4))).offending == (P((5, 3)),)
    assert verdict_alternating(P((3,))).unisingular


def test_family_shapes():
    assert family_shapes(6) == {P((1,) * 6), P((5, 1))}
    assert family_shapes(7) == {P((1,) * 7), P((6, 1)), P((2,) + (1,) * 5), P((2, 2, 1, 1, 1))}


def test_scan_rows():
    r6 = scan(6)
    assert (r6.partition_count, r6.unisingular_count) == (11, 8)
    assert {v.lam for v in r6.non_unisingular} == {P((5, 1)), P((1,) * 6), P((2, 2, 2))}
    assert [v.lam for v in r6.exceptional] == [P((2, 2, 2))]
    assert scan(9).unisingular_count == 26 and scan(9).exceptional == ()
    assert scan(2).unisingular_count == 1
    r4 = scan(4)
    assert r4.unisingular_count == 2
    assert [(v.lam, v.offending) for v in r4.exceptional] == [(P((2, 2)), (P((3, 1)),))]


def test_scan_range_checked():
    with pytest.raises(ValueError):
        scan(1)
    with pytest.raises(ValueError):
        scan(9, ScanConfig(max_n=8))


def test_scan_uses_supplied_verdicts():
    fake = UnisingularVerdict(P((4,)), False, (P((4,)),), 1)
    report = scan(4, verdicts={P((4,)): fake})
    assert report.verdicts[0] is fake


@pytest.mark.parametrize("n", [2, 6, 8])
def test_report_json_round_trip(n):
    report = scan(n)
    text = report.to_json()
    assert ScanReport.from_json(text) == report
    data = json.loads(text)
    assert set(data) == {"version", "n", "partition_count", "unisingular_count", "verdicts", "exceptional"}


def test_report_rejects_bad_version_and_counts():
    data = scan(3).to_dict()
    with pytest.raises(ValueError):
        ScanReport.from_dict({**data, "version": "0"})
    with pytest.raises(ValueError):
        ScanReport.from_dict({**data, "unisingular_count": 3})


def test_parallel_scan_is_identical():
    assert scan(7, ScanConfig(jobs=2)) == scan(7)


@given(partitions(2, 9))
def test_trivial_module_always_unisingular(lam):
    v = verdict(P((lam.n,)))
    assert v.unisingular and v.dimension == 1
