"""Single Schroeder paths with column-parity step weights, and the L(t) function.

Step weights from a column of even parity: up b, flat b^2, down a.  From an
odd column a and b trade places.  Paths start at column 0 and are not
constrained in height.
"""
import math
from fractions import Fraction

import numpy as np
import sympy

from .exact_algebra import BiSeries, LaurentPoly, as_rational, series_of_rational
from .solvers import bisect


def _weights(col, a, b):
    if col % 2 == 0:
        return b, b * b, a
    return a, a * a, b


def path_table(imax, a, b):
    """Exact Z[i] = {j: value} for 0 <= i <= imax."""
    Z = [dict() for _ in range(imax + 1)]
    Z[0][0] = Fraction(1) if isinstance(a, Fraction) else 1
    for i in range(1, imax + 1):
        row = {}
        up, _, down = _weights(i - 1, a, b)
        for j, z in Z[i - 1].items():
            row[j + 1] = row.get(j + 1, 0) + up * z
            row[j - 1] = row.get(j - 1, 0) + down * z
        if i >= 2:
            _, flat, _ = _weights(i - 2, a, b)
            for j, z in Z[i - 2].items():
                row[j] = row.get(j, 0) + flat * z
        Z[i] = row
    return Z


def path_Z(i, j, a, b):
    if i < 0 or (i + j) % 2:
        return 0
    return path_table(i, a, b)[i].get(j, 0)


def log_path_Z_float(i, j, a, b):
    """log Z_{i,j} in floats with per-column renormalization."""
    off = i + 1
    cols = [np.zeros(2 * off + 1)]
    cols[0][off] = 1.0
    logs = [0.0]
    for c in range(1, i + 1):
        up, _, down = _weights(c - 1, a, b)
        prev = cols[c - 1]
        new = np.zeros_like(prev)
        new[1:] += up * prev[:-1]
        new[:-1] += down * prev[1:]
        ref = logs[c - 1]
        if c >= 2:
            _, flat, _ = _weights(c - 2, a, b)
            new += flat * cols[c - 2] * math.exp(logs[c - 2] - ref)
        s = new.max()
        cols.append(new / s)
        logs.append(ref + math.log(s))
    return math.log(cols[i][off + j]) + logs[i]


def path_gf_series(order, a, b):
    """Coefficients of G(x, y) up to x^order; entry (i, 0) holds a LaurentPoly in y."""
    a, b = as_rational(a), as_rational(b)
    one = LaurentPoly.const(1)
    y = LaurentPoly.monomial(1)
    yi = LaurentPoly.monomial(-1)
    num = BiSeries({(0, 0): one, (2, 0): -a * a * one, (1, 0): b * y + a * yi}, order)
    cross = (a * y + b * yi) * (b * y + a * yi)
    den = BiSeries({
        (0, 0): one,
        (2, 0): -(a * a + b * b) * one - cross,
        (4, 0): (a * a * b * b) * one,
    }, order)
    return series_of_rational(num, den, order)


def path_gf_coeff(i, j, a, b, order=None):
    s = path_gf_series(i if order is None else order, a, b)
    c = s[(i, 0)]
    if isinstance(c, LaurentPoly):
        return c.terms.get(j, Fraction(0))
    return Fraction(0)


def lgv_matrix(n, a, b):
    a, b = as_rational(a), as_rational(b)
    tab_ab = path_table(2 * n, a, b)
    tab_ba = path_table(2 * n, b, a)
    rows = []
    for i in range(n + 1):
        tab = tab_ab if i % 2 == 0 else tab_ba
        rows.append([tab[i + j].get(j - i, Fraction(0)) for j in range(n + 1)])
    return rows


def lgv_determinant(n, a, b):
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                      for row in lgv_matrix(n, a, b)])
    d = M.det(method="bareiss")
    return Fraction(int(d.p), int(d.q))


# --- L(t) --------------------------------------------------------------------

def alpha_of(a, b):
    return (a * a + b * b) / (a * b)


def t_of_p_raw(p, alpha):
    """t(p) as a ratio with a removable 0/0 where (1 - p^2)^2 = 2 alpha p^2."""
    p2 = p * p
    num = (2 * alpha * p * (1 - p2 * p2) * math.sqrt(p2 * p2 + (alpha * alpha - 2) * p2 + 1)
           - 2 * alpha * alpha * p2 * (1 + p2 * p2) - (1 - p2) ** 4)
    den = (1 - p2) ** 4 - 4 * alpha * alpha * p2 * p2
    return num / den


def t_of_p(p, alpha):
    """t(p) with the common factor cancelled: the denominator is positive on 0 < p <= 1."""
    p2 = p * p
    S = math.sqrt(p2 * p2 + (alpha * alpha - 2) * p2 + 1)
    den = (2 * alpha * p * (1 - p2 * p2) * S
           + 2 * alpha * alpha * p2 * (1 + p2 * p2) + (1 - p2) ** 4)
    return -((1 - p2) ** 4 - 4 * alpha * alpha * p2 * p2) / den


def check_t_monotone(alpha, samples=2000):
    """Assert t(p) increases on (0, 1]; raise with the first bad sample otherwise."""
    ps = np.linspace(1e-4, 1.0, samples)
    ts = np.array([t_of_p(p, alpha) for p in ps])
    bad = np.nonzero(np.diff(ts) <= 0)[0]
    if len(bad):
        i = bad[0]
        raise RuntimeError("t(p) not increasing near p=%g (alpha=%g)" % (ps[i], alpha))
    return True


_checked = set()


def p_of_t(t, alpha):
    """Invert t(p) on the physical branch 0 < p <= 1."""
    if t >= 1:
        return 1.0
    key = round(alpha, 12)
    if key not in _checked:
        check_t_monotone(alpha)
        _checked.add(key)
    # bisect in log p so tiny p (t near -1) keeps full relative accuracy
    lp = bisect(lambda s: t_of_p(math.exp(s), alpha) - t, -700.0, -1e-16)
    return math.exp(lp)


def L_of_t(t, a, b):
    """(L, x, y) with L = -log x - t log y at the saddle point."""
    a, b = float(a), float(b)
    sab = math.sqrt(a * b)
    if t >= 1 or t <= -1:
        return math.log(sab), None, None
    alpha = alpha_of(a, b)
    p = p_of_t(t, alpha)
    # positive root of Q = 0 at fixed xy; same value as the saddle-point
    # expression sqrt((t - p^2)/(t p^2 - 1)) but free of cancellation near p = 1
    omp = 1 - p * p
    ratio = omp / (alpha * p + math.sqrt(alpha * alpha * p * p + omp * omp)) / sab
    prod = p / sab
    x = math.sqrt(prod * ratio)
    y = math.sqrt(prod / ratio)
    return -math.log(x) - t * math.log(y), x, y
