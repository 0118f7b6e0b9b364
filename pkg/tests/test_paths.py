import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from aztec_tangent.aztec_lattice import Z_closed
from aztec_tangent.paths import (
    L_of_t, alpha_of, check_t_monotone, lgv_determinant, lgv_matrix, log_path_Z_float,
    p_of_t, path_Z, path_gf_coeff, path_gf_series, path_table, t_of_p, t_of_p_raw)
from aztec_tangent.solvers import BracketError, bisect

from conftest import rationals


def test_small_values():
    a, b = Fraction(2), Fraction(5)
    assert path_Z(0, 0, a, b) == 1
    assert path_Z(1, 1, a, b) == b
    assert path_Z(2, 0, b, a) == 2 * a * a + b * b
    assert path_Z(2, 0, 1, 2) == 9
    assert path_Z(3, 0, a, b) == 0
    assert path_Z(-1, 1, a, b) == 0


def test_frozen_values():
    assert path_Z(3, 1, Fraction(1), Fraction(2)) == 22
    assert path_Z(4, 0, Fraction(1), Fraction(2)) == 94


def test_uniform_counts():
    # unit weights: count words in U, D, F with F spanning two columns
    tab = path_table(6, 1, 1)
    assert sum(tab[2].values()) == 5
    assert tab[4][0] == 6 + 6 + 1


@given(rationals(), rationals())
@settings(max_examples=5)
def test_gf_matches_dp(a, b):
    order = 12
    s = path_gf_series(order, a, b)
    tab = path_table(order, a, b)
    for i in range(order + 1):
        c = s[(i, 0)]
        terms = c.terms if hasattr(c, "terms") else {}
        assert {j: v for j, v in terms.items() if v} == {j: v for j, v in tab[i].items() if v}


def test_gf_coeff_examples():
    assert path_gf_coeff(0, 0, 3, 4) == 1
    assert path_gf_coeff(2, 0, 1, 2) == 9
    rng = random.Random(7)
    for _ in range(5):
        a, b = Fraction(rng.randint(1, 9), rng.randint(1, 9)), Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert path_gf_coeff(3, 1, a, b) == path_Z(3, 1, a, b)


def test_lgv_matrix_uniform():
    assert lgv_matrix(3, 1, 1) == [[1, 1, 1, 1], [1, 3, 5, 7], [1, 5, 13, 25], [1, 7, 25, 63]]


def test_lgv_examples():
    assert lgv_determinant(3, 1, 1) == 64
    a, b = Fraction(2), Fraction(3)
    assert lgv_determinant(3, a, b) == 16 * a ** 4 * b ** 4 * (a * a + b * b) ** 2
    assert lgv_determinant(1, a, b) == Z_closed(1, a, b)
    assert lgv_determinant(5, 1, 2) == Z_closed(5, 1, 2)


@given(rationals(), rationals())
@settings(max_examples=3)
def test_lgv_equals_closed(a, b):
    for n in range(1, 7):
        assert lgv_determinant(n, a, b) == Z_closed(n, a, b)


def test_float_log_dp():
    a, b = Fraction(1), Fraction(2)
    for i, j in [(10, 0), (11, 3), (20, 8)]:
        assert log_path_Z_float(i, j, 1.0, 2.0) == pytest.approx(math.log(path_Z(i, j, a, b)), rel=1e-12)


@pytest.mark.parametrize("alpha", [2.0, 2.5, 4.25, 10.1])
def test_t_of_p_branch(alpha):
    assert t_of_p(1.0, alpha) == pytest.approx(1.0)
    assert t_of_p(1e-9, alpha) == pytest.approx(-1.0, abs=1e-6)
    assert check_t_monotone(alpha)
    for p in (0.1, 0.3, 0.7, 0.95):
        assert t_of_p(p, alpha) == pytest.approx(t_of_p_raw(p, alpha), rel=1e-9, abs=1e-12)


def test_t_stable_at_removable_point():
    p = math.sqrt(2) - 1
    assert math.isfinite(t_of_p(p, 2.0))
    assert t_of_p(p, 2.0) == pytest.approx(0.5 * (t_of_p(p - 1e-5, 2.0) + t_of_p(p + 1e-5, 2.0)), abs=1e-8)


@pytest.mark.parametrize("t", [-0.95, -0.5, 0.0, 0.3, 0.9, 0.999])
def test_p_of_t_inverts(t):
    alpha = alpha_of(1.0, 2.0)
    assert t_of_p(p_of_t(t, alpha), alpha) == pytest.approx(t, abs=1e-11)


def test_L_endpoints():
    assert L_of_t(1.0, 1.0, 2.0)[0] == pytest.approx(math.log(math.sqrt(2)))
    assert L_of_t(-1.0, 1.0, 2.0)[0] == pytest.approx(math.log(math.sqrt(2)))


@pytest.mark.parametrize("t", [-0.9, -0.4, 0.0, 0.4, 0.9])
def test_saddle_system(t):
    a, b = 1.0, 2.0
    _, x, y = L_of_t(t, a, b)
    alpha = alpha_of(a, b)
    p = math.sqrt(a * b) * x * y
    assert t_of_p(p, alpha) == pytest.approx(t, abs=1e-10)
    # kernel of the path generating function vanishes at (x, y)
    Q = 1 - (a * a + b * b) * x * x - x * x * (a * y + b / y) * (b * y + a / y) + a * a * b * b * x ** 4
    assert abs(Q) < 1e-10


@pytest.mark.parametrize("t", [-0.8, -0.4, 0.0, 0.4, 0.8])
def test_L_derivative(t):
    h = 1e-5
    a, b = 1.0, 2.0
    d = (L_of_t(t + h, a, b)[0] - L_of_t(t - h, a, b)[0]) / (2 * h)
    assert abs(d + math.log(L_of_t(t, a, b)[2])) < 1e-6


def test_L_against_lattice():
    n = 300
    val = log_path_Z_float(n, int(0.4 * n), 1.0, 2.0) / n
    assert abs(val - L_of_t(0.4, 1.0, 2.0)[0]) < 2e-2


def test_bisect_errors():
    with pytest.raises(BracketError):
        bisect(lambda x: x * x + 1, -1.0, 1.0)
    assert bisect(lambda x: x ** 3 - 2, 0.0, 2.0) == pytest.approx(2 ** (1 / 3), abs=1e-12)
