import math
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings

from aztec_tangent.aztec_lattice import T_closed
from aztec_tangent.exact_algebra import BETA, LaurentPoly
from aztec_tangent.refined import (
    G0_closed_series, G_assembled_series, T_one_refined, boundary_distribution,
    boundary_probability, denominator_symmetric, epsilon, level_coefficient,
    level_coefficient_from_T, one_refined, one_refined_at, one_refined_float,
    series_from_tables, two_refined, two_refined_S, two_refined_closed, two_refined_float,
    uniform_two_refined)

from conftest import rationals

ONE = LaurentPoly.const(1)


def test_first_rows():
    rows = one_refined(3)
    assert rows[1] == [ONE, ONE]
    assert rows[2] == [BETA, 1 + BETA, ONE]
    assert rows[3] == [ONE, 1 + 2 * BETA, 1 + 2 * BETA, ONE]


def test_pascal_degeneration():
    rows = one_refined(30)
    for n, row in enumerate(rows):
        assert [p.evaluate(1) for p in row] == [comb(n, k) for k in range(n + 1)]


def test_exact_evaluation_matches_polynomials():
    beta = Fraction(3, 7)
    rows = one_refined(12)
    at, at_inv = one_refined_at(12, beta)
    for n in range(13):
        assert at[n] == [p.evaluate(beta) for p in rows[n]]
        assert at_inv[n] == [p.evaluate(1 / beta) for p in rows[n]]


def test_order_three_times_prefactor():
    a, b = Fraction(1), Fraction(2)
    assert T_one_refined(3, a, b) == [Fraction(5), Fraction(15, 2), Fraction(15, 2), Fraction(5)]


def test_G0_constant_and_u4():
    s = G0_closed_series(8)
    assert s[(0, 0)] == ONE
    assert s[(4, 0)] == one_refined(4)[4][0]


def test_generating_functions_through_order_12():
    assert G0_closed_series(12) == series_from_tables(12, 0)
    assert G_assembled_series(12) == series_from_tables(12)


def test_denominator_symmetry():
    assert denominator_symmetric()


def test_order_one_two_refined():
    a = Fraction(5, 3)
    assert two_refined(1, a, 2)[1] == [[1 / a, 0], [0, 1 / a]]


def test_order_two_entries():
    a, b = Fraction(2), Fraction(3)
    t = two_refined(2, a, b)[2]
    assert t[1][1] == 2 / a ** 2 + 1 / b ** 2
    assert t[2][2] == 2 / a ** 2
    assert t[0][0] == 1 / b ** 2 and t[1][0] == 1 / b ** 2
    assert two_refined(2, 1, 1)[2][1][1] == 3


@given(rationals(), rationals())
@settings(max_examples=6)
def test_two_refined_identities(a, b):
    tabs = two_refined(10, a, b)
    for n in range(1, 11):
        t = tabs[n]
        one = T_one_refined(n, a, b)
        assert all(t[k][l] == t[l][k] for k in range(n + 1) for l in range(n + 1))
        assert [sum(r) for r in t] == one
        assert sum(one) == T_closed(n, a, b)
        assert t[n] == [0] * n + [T_closed(n - 1, a, b) / a]
        side = 1 / b if n % 2 == 0 else 1 / a
        if n >= 2:
            prev = T_one_refined(n - 1, b, a)
            assert t[0] == [side * x for x in prev] + [0]


def test_uniform_closed_form():
    assert uniform_two_refined(2, 1, 1) == Fraction(3, 2)
    assert uniform_two_refined(1, 1, 1) == 1
    for n in range(1, 7):
        S = two_refined_S(n, 1, 1)
        assert all(S[k][l] == uniform_two_refined(n, k, l) for k in range(n + 1) for l in range(n + 1))
        assert sum(uniform_two_refined(n, k, l) for k in range(n + 1) for l in range(n + 1)) == 2 ** n


def test_epsilon_at_one():
    assert all(epsilon(n, 1.0) == pytest.approx(2.0) for n in range(1, 9))


@pytest.mark.parametrize("a,b", [(1, 2), (3, 2), (Fraction(5, 7), Fraction(1, 3))])
def test_level_coefficient_against_closed_forms(a, b):
    beta = float(Fraction(a) ** 2 / Fraction(b) ** 2)
    for n in range(2, 16):
        assert level_coefficient(n, beta) == pytest.approx(float(level_coefficient_from_T(n, a, b)), rel=1e-12)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (3, 2)])
def test_closed_sum_matches_exact(a, b):
    beta = (a / b) ** 2
    for n in range(1, 8):
        S = two_refined_S(n, a, b)
        for k in range(n + 1):
            for l in range(n + 1):
                exact = float(S[k][l])
                val = two_refined_closed(n, k, l, beta)
                assert val == pytest.approx(exact, rel=1e-10, abs=1e-300)


def test_float_two_refined_matches_exact():
    a, b = Fraction(3), Fraction(2)
    M, ls = two_refined_float(9, 9 / 4)
    S = two_refined_S(9, a, b)
    ref = np.array([[float(x) for x in row] for row in S])
    assert np.allclose(M * math.exp(ls), ref, rtol=1e-11, atol=0)


def test_float_one_refined_matches_exact():
    p, ls = one_refined_float(40, 0.3)
    exact = one_refined_at(40, Fraction(3, 10))[0][40]
    assert np.allclose(p * math.exp(ls), [float(x) for x in exact], rtol=1e-11)


def test_probabilities():
    assert boundary_distribution(1, 1, 1) == [Fraction(1, 2), Fraction(1, 2)]
    for n in range(1, 11):
        a, b = Fraction(n, 3), Fraction(2, n + 1)
        assert sum(boundary_distribution(n, a, b)) == 1
    assert boundary_probability(3, 1, 2, 5) == boundary_distribution(3, 2, 5)[1]


def test_probability_matches_conventional_brute_force():
    from aztec_tangent.aztec_lattice import two_periodic_grid
    from aztec_tangent.matchings import AztecGraph, nw_marginal, refined_counts
    a, b = Fraction(2), Fraction(3)
    for n in range(1, 5):
        t = refined_counts(AztecGraph(n), two_periodic_grid(n, a, b), "conventional")
        marg = nw_marginal(t, n)
        tot = sum(marg)
        assert [x / tot for x in marg] == boundary_distribution(n, a, b)
