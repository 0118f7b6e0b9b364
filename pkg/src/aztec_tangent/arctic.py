"""Outer arctic curve: parametric form, tangent-line envelope, degree-8 check."""
import math

import numpy as np
from scipy import integrate

from .asymptotics import Params, dr_dv, r_of_v
from .paths import L_of_t, alpha_of, p_of_t, t_of_p


def t_star(v, beta):
    """Slope of the tangent line leaving the NW boundary, as a function of v = v(r)."""
    return t_of_p(1.0 / v, Params(beta).alpha)


def _parts(v, beta):
    P = Params(beta)
    k = math.sqrt(P.beta) / (P.beta + 1)
    kap = (P.beta - 1) ** 2 / P.beta
    w = v * v
    R = math.sqrt(w * w + P.gamma * w + 1)
    N1 = 0.5 * (w * w - 1) * (w + 1) ** 2
    M = 2 * k * v * R ** 3
    D = (w + 1) ** 4 + 4 * kap * w * w
    dN1 = 2 * v * (w + 1) * (w * (w + 1) + w * w - 1)
    dM = 2 * k * R * (R * R + 3 * w * (2 * w + P.gamma))
    dD = 8 * v * (w + 1) ** 3 + 16 * kap * v * w
    return N1, M, D, dN1, dM, dD


def geometric_curve(v, beta):
    """(X, Y) on the outer component; v in [1, inf) traces the north arc."""
    N1, M, D, _, _, _ = _parts(v, beta)
    return (N1 - M) / D, (N1 + M) / D


def geometric_curve_derivative(v, beta):
    N1, M, D, dN1, dM, dD = _parts(v, beta)
    dX = ((dN1 - dM) * D - (N1 - M) * dD) / (D * D)
    dY = ((dN1 + dM) * D - (N1 + M) * dD) / (D * D)
    return dX, dY


def degree8_residual(U, V, beta):
    """Degree-8 polynomial at (U, V) = (X + Y, Y - X), divided by its largest monomial."""
    b = beta
    U2, V2 = U * U, V * V
    terms = [
        (b + 1) ** 6 * (U2 ** 4 + V2 ** 4),
        -4 * (b + 1) ** 4 * (b * b - 6 * b + 1) * U2 * V2 * (U2 * U2 + V2 * V2),
        2 * (b + 1) ** 2 * (3 * b ** 4 - 20 * b ** 3 + 82 * b * b - 20 * b + 3) * U2 ** 2 * V2 ** 2,
        -4 * (b + 1) ** 4 * (b * b - b + 1) * (U2 ** 3 + V2 ** 3),
        4 * (b + 1) ** 2 * (b ** 4 + 17 * b ** 3 - 48 * b * b + 17 * b + 1) * U2 * V2 * (U2 + V2),
        6 * (b ** 4 - 1) * (b * b - 1) * (U2 * U2 + V2 * V2),
        4 * (b - 1) ** 2 * (b ** 4 - 22 * b ** 3 - 42 * b * b - 22 * b + 1) * U2 * V2,
        -4 * (b - 1) ** 4 * (b * b + b + 1) * (U2 + V2),
        (b - 1) ** 6,
    ]
    scale = max(abs(t) for t in terms)
    return sum(terms) / scale if scale else 0.0


def curve_residual(v, beta):
    X, Y = geometric_curve(v, beta)
    return degree8_residual(X + Y, Y - X, beta)


# --- two-refined tangent lines -----------------------------------------------

def line_slope(v, beta):
    P = Params(beta)
    A = P.alpha * v * (v * v + 1)
    B = (v * v - 1) * P.R(v)
    return (A - B) / (A + B)


def line_intercept(v, beta):
    P = Params(beta)
    return 1.0 / ((v * v - 1) / (v * v + 1) + P.alpha * v / P.R(v))


def line_slope_derivative(v, beta):
    P = Params(beta)
    R, dR = P.R(v), P.dR(v)
    A = P.alpha * v * (v * v + 1)
    dA = P.alpha * (3 * v * v + 1)
    B = (v * v - 1) * R
    dB = 2 * v * R + (v * v - 1) * dR
    return 2 * (dA * B - A * dB) / (A + B) ** 2


def line_intercept_derivative(v, beta):
    P = Params(beta)
    R, dR = P.R(v), P.dR(v)
    W = (v * v - 1) / (v * v + 1) + P.alpha * v / R
    dW = 4 * v / (v * v + 1) ** 2 + P.alpha * (R - v * dR) / (R * R)
    return -dW / (W * W)


def two_refined_curve(v, beta):
    """Envelope point of the lines Y = a(v) X + b(v)."""
    da = line_slope_derivative(v, beta)
    if da == 0:
        raise ArithmeticError("stationary slope at v=%r (cusp)" % v)
    X = -line_intercept_derivative(v, beta) / da
    return X, line_slope(v, beta) * X + line_intercept(v, beta)


def central_diff(f, v, h=1e-6):
    return (f(v + h) - f(v - h)) / (2 * h)


def one_refined_envelope(v, beta):
    """Envelope of the lines through (r - 1, r) with slope t*, parametrized by v = v(r)."""
    r = r_of_v(v, beta)
    ts = t_star(v, beta)
    # five-point stencil for dt*/dv; the closed form is long and this is accurate to ~1e-12
    h = 1e-3 * v
    dts = (-t_star(v + 2 * h, beta) + 8 * t_star(v + h, beta)
           - 8 * t_star(v - h, beta) + t_star(v - 2 * h, beta)) / (12 * h)
    dts_dr = dts / dr_dv(v, beta)
    X = (ts - 1) / dts_dr + r - 1
    return X, ts * (X - r + 1) + r


def sample_v(count, vmax=1e3):
    """Logarithmic grid on [1, vmax]."""
    return np.logspace(0.0, math.log10(vmax), count)


def full_outer_curve(beta, count=200, vmax=1e3):
    """North arc plus its images under the diamond's reflections, as a closed polyline."""
    north = [geometric_curve(v, beta) for v in sample_v(count, vmax)]
    east = [(y, -x) for (x, y) in north]
    south = [(-x, -y) for (x, y) in north]
    west = [(-y, x) for (x, y) in north]
    return north + east + south + west


# --- arc integral ------------------------------------------------------------

def arc_integral(beta, a=None, b=None):
    """Integral of L(h'(x)) over the north arc, returned with its quadrature error.

    With w = 1/v the arc maps to w in (0, 1]; the integrand L(h') X'(v) / w^2
    stays bounded as w -> 0.  Only the product ab matters once beta is fixed.
    """
    if a is None or b is None:
        a = beta ** 0.25
        b = 1 / a
    sab = math.sqrt(a * b)
    # weights with the same beta and product ab
    aa = sab * beta ** 0.25
    bb = sab / beta ** 0.25

    def integrand(w):
        if w <= 0:
            return 0.0
        v = 1.0 / w
        dX, dY = geometric_curve_derivative(v, beta)
        slope = max(-1.0, min(1.0, dY / dX))
        return L_of_t(slope, aa, bb)[0] * dX / (w * w)

    val, err = integrate.quad(integrand, 0.0, 1.0, limit=200, epsabs=1e-11, epsrel=1e-11)
    return val, err


def arc_integral_closed(beta, ab=1.0):
    return 0.5 * math.log(2 * ab * (1 + beta) / math.sqrt(beta))


def p_of_t_star_residual(v, beta):
    return abs(p_of_t(t_star(v, beta), alpha_of(beta ** 0.25, beta ** -0.25)) - 1.0 / v)
