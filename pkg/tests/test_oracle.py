from collections import Counter
from math import comb

import pytest
from hypothesis import given

from strategies import partition_pairs
from unispecht.characters import permutation_character
from unispecht.charpoly import CycloProduct, charpoly, m_mu
from unispecht.oracle import (
    BudgetExceeded,
    Tabloid,
    char_div_factors,
    class_representative,
    closed_form_lemma44,
    closed_form_transpositions,
    perm_module_charpoly,
    specht_charpoly_oracle,
    tabloid_orbit_lengths,
    tabloids,
)
from unispecht.partitions import Partition, enumerate_partitions, permutation_module_dimension

P = Partition


def test_tabloid_validation_and_action():
    t = Tabloid(((1, 3), (2,)))
    assert t.shape == (2, 1)
    assert t.act({1: 2, 2: 3, 3: 1}) == Tabloid(((1, 2), (3,)))
    with pytest.raises(ValueError):
        Tabloid(((1, 1), (2,)))
    with pytest.raises(ValueError):
        Tabloid(((1,), (3,)))


def test_class_representative():
    assert class_representative(P((3, 2))) == {1: 2, 2: 3, 3: 1, 4: 5, 5: 4}


@pytest.mark.parametrize("shape", [(3, 2), (2, 2, 1), (4,), (2, 1, 1, 1)])
def test_tabloid_count(shape):
    ts = tabloids(P(shape))
    assert len(ts) == len(set(ts)) == permutation_module_dimension(P(shape))


def test_orbit_examples():
    assert tabloid_orbit_lengths(P((5, 2)), P((7,))) == Counter({7: 3})
    assert tabloid_orbit_lengths(P((6,)), P((3, 2, 1))) == Counter({1: 1})
    assert tabloid_orbit_lengths(P((5, 2)), P((5, 2))) == Counter({5: 2, 10: 1, 1: 1})


def test_perm_module_examples():
    assert perm_module_charpoly(P((5, 2)), P((7,))) == CycloProduct({1: 3, 7: 3})
    assert perm_module_charpoly(P((4, 2)), P((2, 2, 2))) == CycloProduct({1: 9, 2: 6})


@pytest.mark.parametrize("n", range(2, 8))
def test_points_module(n):
    for mu in enumerate_partitions(n):
        assert perm_module_charpoly(P((n - 1, 1)), mu) == m_mu(mu)


@given(partition_pairs(2, 7))
def test_orbits_reproduce_permutation_character(pair):
    lam, mu = pair
    orbits = tabloid_orbit_lengths(lam, mu)
    assert sum(length * c for length, c in orbits.items()) == permutation_module_dimension(lam)
    assert orbits[1] == permutation_character(lam, mu)


def test_budget():
    with pytest.raises(BudgetExceeded):
        tabloid_orbit_lengths(P((4, 4)), P((8,)), budget=comb(8, 4) - 1)
    with pytest.raises(BudgetExceeded):
        specht_charpoly_oracle(P((2, 2, 2)), P((6,)), budget=10)


@pytest.mark.parametrize(
    "lam,mu,factors",
    [
        ((4, 4), (5, 3), {3: 1, 5: 1, 15: 1}),
        ((3,), (2, 1), {1: 1}),
        ((5, 1), (6,), {2: 1, 3: 1, 6: 1}),
        ((2, 2, 2), (6,), {1: 2, 2: 1, 3: 1}),
        ((2, 2, 2), (3, 2, 1), {2: 1, 3: 1, 6: 1}),
    ],
)
def test_specht_oracle_values(lam, mu, factors):
    assert specht_charpoly_oracle(P(lam), P(mu)) == CycloProduct(factors)


@pytest.mark.parametrize("n", range(2, 7))
def test_oracle_agrees_with_characters(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert specht_charpoly_oracle(lam, mu) == charpoly(lam, mu)


@pytest.mark.parametrize(
    "n,expected",
    [
        (5, CycloProduct.x_pow_minus_one(3) * CycloProduct.x_pow_minus_one(6) * CycloProduct.x_pow_minus_one(1)),
        (7, CycloProduct.x_pow_minus_one(5, 2) * CycloProduct.x_pow_minus_one(10) * CycloProduct.x_pow_minus_one(1)),
        (9, CycloProduct.x_pow_minus_one(7, 3) * CycloProduct.x_pow_minus_one(14) * CycloProduct.x_pow_minus_one(1)),
    ],
)
def test_two_row_closed_form(n, expected):
    assert closed_form_lemma44(n) == expected == perm_module_charpoly(P((n - 2, 2)), P((n - 2, 2)))


def test_closed_form_arguments():
    for bad in (3, 4, 6):
        with pytest.raises(ValueError):
            closed_form_lemma44(bad)
    with pytest.raises(ValueError):
        char_div_factors(1)
    with pytest.raises(ValueError):
        closed_form_transpositions(0)


def test_cycle_factor_examples():
    assert char_div_factors(4) == CycloProduct.x_pow_minus_one(4) * CycloProduct.x_pow_minus_one(2)
    assert char_div_factors(3) == CycloProduct.x_pow_minus_one(3)
    assert char_div_factors(2) == CycloProduct({1: 1})


def test_transposition_closed_form():
    assert closed_form_transpositions(3) == CycloProduct.x_pow_minus_one(1, 3) * CycloProduct.x_pow_minus_one(2, 6)
    assert perm_module_charpoly(P((4, 2)), P((2, 2, 2))) == closed_form_transpositions(3)
