"""One- and two-refined boundary partition functions.

S_{n,k}(beta) is the NW-refined partition function normalized so that
T_{n,k}(a,b) = S_{n,k}(beta) T_{n-1}(a,b) / a with beta = a^2/b^2.  The two-
refined version uses the same normalization, S_{n,k,l} = a T_{n,k,l} / T_{n-1}.
"""
import math
from fractions import Fraction
from math import comb

import numpy as np

from .aztec_lattice import T_closed
from .exact_algebra import BETA, BiSeries, LaurentPoly, as_rational, series_of_rational


def _c_exact(n):
    return LaurentPoly.const(1) if n % 4 in (0, 1) else BETA


def one_refined(n):
    """Rows S_0 .. S_n of LaurentPolys, built by the twisted Pascal rule."""
    rows = [[LaurentPoly.const(1)]]
    for m in range(1, n + 1):
        prev = rows[-1]
        prev_inv = [p.invert_variable() for p in prev]
        c = _c_exact(m)
        row = []
        for k in range(m + 1):
            val = LaurentPoly()
            if k >= 1:
                val = val + prev[k - 1]
            if k <= m - 1:
                val = val + c * prev_inv[k]
            row.append(val)
        rows.append(row)
    return rows


def one_refined_at(n, beta):
    """Rows S_0 .. S_n evaluated exactly at a rational beta.

    Carries the beta and 1/beta rows side by side so no polynomial is ever
    built; this is what makes n in the hundreds cheap.
    """
    beta = as_rational(beta)
    ib = 1 / beta
    rows, rows_inv = [[Fraction(1)]], [[Fraction(1)]]
    for m in range(1, n + 1):
        c, ci = (1, 1) if m % 4 in (0, 1) else (beta, ib)
        p, q = rows[-1], rows_inv[-1]
        row, row_inv = [], []
        for k in range(m + 1):
            x = p[k - 1] if k >= 1 else 0
            y = q[k - 1] if k >= 1 else 0
            if k <= m - 1:
                x += c * q[k]
                y += ci * p[k]
            row.append(x)
            row_inv.append(y)
        rows.append(row)
        rows_inv.append(row_inv)
    return rows, rows_inv


def one_refined_float(n, beta):
    """Final row S_{n,.}(beta) in floats, as (mantissas, log_scale)."""
    p = np.array([1.0])
    q = np.array([1.0])
    logscale = 0.0
    for m in range(1, n + 1):
        c, ci = (1.0, 1.0) if m % 4 in (0, 1) else (beta, 1.0 / beta)
        np_, nq = np.zeros(m + 1), np.zeros(m + 1)
        np_[1:] += p
        nq[1:] += q
        np_[:-1] += c * q
        nq[:-1] += ci * p
        s = max(np_.max(), nq.max())
        p, q = np_ / s, nq / s
        logscale += math.log(s)
    return p, logscale


def T_one_refined(n, a, b):
    """Exact T_{n,k}(a,b) for k = 0..n."""
    a, b = as_rational(a), as_rational(b)
    if n == 0:
        return [Fraction(1)]
    row = one_refined_at(n, a * a / (b * b))[0][n]
    pref = T_closed(n - 1, a, b) / a
    return [s * pref for s in row]


def boundary_probability(n, k, a, b):
    """Probability of k vertical NW boundary dominoes for the conventional measure."""
    a, b = as_rational(a), as_rational(b)
    row = T_one_refined(n, 1 / a, 1 / b)
    return row[k] / sum(row)


def boundary_distribution(n, a, b):
    a, b = as_rational(a), as_rational(b)
    row = T_one_refined(n, 1 / a, 1 / b)
    tot = sum(row)
    return [x / tot for x in row]


# --- generating functions ----------------------------------------------------

def _laurent(d):
    return LaurentPoly(d)


def G0_closed_parts(order):
    """Numerator and denominator of the closed G^(0) as BiSeries over LaurentPoly."""
    one = LaurentPoly.const(1)
    binv = BETA.invert_variable()
    num = BiSeries.from_terms([
        (0, 0, one),
        (4, 0, -one),
        (4, 2, -2 * (one + BETA + binv)),
        (4, 4, -one),
        (4, 1, 2 * (one + binv)),
        (4, 3, 2 * (one + BETA)),
    ], order)
    den = BiSeries.from_terms([
        (0, 0, one),
        # -2u^4(1+v^2)^2
        (4, 0, -2 * one), (4, 2, -4 * one), (4, 4, -2 * one),
        # -4u^4 v^2 (beta + 1/beta)
        (4, 2, -4 * (BETA + binv)),
        # u^8 (1-v^2)^4
        (8, 0, one), (8, 2, -4 * one), (8, 4, 6 * one), (8, 6, -4 * one), (8, 8, one),
    ], order)
    return num, den


def G0_closed_series(order):
    num, den = G0_closed_parts(order)
    return series_of_rational(num, den, order)


def series_from_tables(order, residue=None):
    """Sum S_{n,k} u^n v^k over n <= order (optionally n = residue mod 4)."""
    rows = one_refined(order)
    terms = {}
    for n, row in enumerate(rows):
        if residue is not None and n % 4 != residue:
            continue
        for k, s in enumerate(row):
            terms[(n, k)] = s
    return BiSeries(terms, order)


def G_assembled_series(order):
    """Full G from the closed G^(0) at beta and 1/beta with the polynomial prefactors."""
    one = LaurentPoly.const(1)
    g0 = G0_closed_series(order)
    g0_inv = g0.map_coeffs(lambda c: c.invert_variable())
    pre1 = BiSeries.from_terms([
        (0, 0, one), (1, 1, one), (2, 0, BETA), (2, 2, one),
        (3, 1, one + 2 * BETA), (3, 3, one)], order)
    pre2 = BiSeries.from_terms([
        (1, 0, one), (2, 1, one + BETA), (3, 0, one), (3, 2, one + 2 * BETA)], order)
    return pre1 * g0 + pre2 * g0_inv


def denominator_symmetric():
    """The denominator of G^(0) is unchanged by beta -> 1/beta."""
    _, den = G0_closed_parts(8)
    return den == den.map_coeffs(lambda c: c.invert_variable())


# --- two-refined -------------------------------------------------------------

def two_refined(n, a, b):
    """Exact tables T_{m,k,l}(a,b) for m = 0..n as lists of lists.

    Level 0 is the 1x1 table [[1]] by convention; level 1 is seeded directly.
    """
    a, b = as_rational(a), as_rational(b)
    tables = [[[Fraction(1)]]]
    if n == 0:
        return tables
    t1 = [[1 / a, Fraction(0)], [Fraction(0), 1 / a]]
    tables.append(t1)
    for m in range(2, n + 1):
        prev = tables[-1]
        Tm1 = T_closed(m - 1, a, b)
        Tm2 = T_closed(m - 2, a, b)
        one_ba = T_one_refined(m - 1, b, a)
        cur = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        for k in range(m + 1):
            for l in range(k, m + 1):
                val = Fraction(0)
                if k >= 1 and l >= 1:
                    val += Tm1 * prev[k - 1][l - 1]
                if k <= m - 1 and l <= m - 1:
                    val += one_ba[k] * one_ba[l]
                cur[k][l] = cur[l][k] = val / Tm2
        tables.append(cur)
    return tables


def two_refined_S(n, a, b):
    """Exact S_{n,k,l} = a T_{n,k,l} / T_{n-1} for one order n."""
    a, b = as_rational(a), as_rational(b)
    tab = two_refined(n, a, b)[n]
    pref = a / T_closed(n - 1, a, b)
    return [[x * pref for x in row] for row in tab]


def epsilon(n, beta):
    """Level factor in the two-refined S recurrence; equals 2 at beta = 1."""
    sb = math.sqrt(beta)
    r = n % 4
    if r == 0:
        return 1 + beta
    if r == 2:
        return (1 + beta) * sb
    root = math.sqrt(2 * (1 + beta) / sb)
    return root if r == 1 else root * beta ** 1.5


def level_coefficient(n, beta):
    """c^{n/2} eps_n, the weight of the product term at order n."""
    c = math.sqrt(beta) / (2 * (1 + beta))
    return c ** (n / 2) * epsilon(n, beta)


def level_coefficient_from_T(n, a, b):
    """Same coefficient computed from the closed forms (a/b^2) T_{n-2}(b,a)^2 / (T_{n-2} T_{n-1})."""
    a, b = as_rational(a), as_rational(b)
    return a / (b * b) * T_closed(n - 2, b, a) ** 2 / (T_closed(n - 2, a, b) * T_closed(n - 1, a, b))


def two_refined_closed(n, k, l, beta, inv_rows=None):
    """Closed sum for S_{n,k,l}(beta) in floats.

    ``inv_rows`` may carry precomputed rows S_m(1/beta); otherwise they are
    rebuilt exactly at the float value, which is fine for small n.
    """
    if inv_rows is None:
        inv_rows = [[float(x.evaluate_float(1.0 / beta)) for x in row]
                    for row in one_refined(n)]
    total = 1.0 if (k == n and l == n) else 0.0
    for i in range(min(k, l) + 1):
        m = n - 1 - i
        if m < 0 or k - i > m or l - i > m:
            continue
        total += level_coefficient(n - i, beta) * inv_rows[m][k - i] * inv_rows[m][l - i]
    return total


def uniform_two_refined(n, k, l):
    """Exact S_{n,k,l}(1) from the binomial closed form (C(-1, .) = 0)."""
    def C(p, q):
        return comb(p, q) if p >= 0 and 0 <= q <= p else 0
    val = Fraction(1) if (k == n and l == n) else Fraction(0)
    acc = 0
    for i in range(min(k, l) + 1):
        acc += 2 ** i * C(n - 1 - i, k - i) * C(n - 1 - i, l - i)
    return val + Fraction(acc, 2 ** (n - 1)) if n >= 1 else val + acc * 2


def two_refined_float(n, beta):
    """S_{n,.,.}(beta) as a float matrix with a log scale: (M, log_scale).

    Runs the S recurrence level by level, renormalizing to stay in range.
    """
    # level 1: S_{1,0,0} = S_{1,1,1} = 1
    S2 = np.eye(2)
    log2 = 0.0
    p = np.array([1.0, 1.0])      # S_{1,.}(beta)
    q = np.array([1.0, 1.0])      # S_{1,.}(1/beta)
    log1 = 0.0
    for m in range(2, n + 1):
        K = level_coefficient(m, beta)
        new = np.zeros((m + 1, m + 1))
        new[1:, 1:] = S2
        factor = K * math.exp(2 * log1 - log2)
        new[:m, :m] += factor * np.outer(q, q)
        s = new.max()
        S2 = new / s
        log2 += math.log(s)
        c, ci = (1.0, 1.0) if m % 4 in (0, 1) else (beta, 1.0 / beta)
        np_, nq = np.zeros(m + 1), np.zeros(m + 1)
        np_[1:] += p
        nq[1:] += q
        np_[:-1] += c * q
        nq[:-1] += ci * p
        s1 = max(np_.max(), nq.max())
        p, q = np_ / s1, nq / s1
        log1 += math.log(s1)
    return S2, log2
