"""Saddle-point free energies for refined boundary partition functions.

Everything is parametrized by v > 0.  With gamma = beta + 1/beta and
alpha = (1 + beta)/sqrt(beta), R(v) = sqrt(1 + gamma v^2 + v^4):

    u(v)^2 = 1 / (R + alpha v)
    r(v)   = v g(v^2) / (R (alpha/2 (1 + v^2) + v R))
    g(w)   = w^2 + (gamma + 1 - c0) w + c0,     c0 = alpha^2 / 4

The form of r(v) above has the removable singularity at v = 1 cancelled, so
it is safe to evaluate everywhere on v > 0.
"""
import math

from .paths import L_of_t
from .solvers import bisect


class Params:
    def __init__(self, beta):
        if beta <= 0:
            raise ValueError("beta must be positive")
        self.beta = float(beta)
        self.gamma = self.beta + 1 / self.beta
        self.alpha = (1 + self.beta) / math.sqrt(self.beta)
        self.c0 = self.alpha ** 2 / 4
        # [uv(r) uv(s)]^2 at tangency; also the per-site factor of the two-refined sum
        self.c = math.sqrt(self.beta) / (2 * (1 + self.beta))

    def R(self, v):
        return math.sqrt(1 + self.gamma * v * v + v ** 4)

    def dR(self, v):
        return (self.gamma * v + 2 * v ** 3) / self.R(v)


def u_of_v(v, beta):
    P = Params(beta)
    return 1 / math.sqrt(P.R(v) + P.alpha * v)


def u_of_v_alt(v, beta):
    """Second closed form of u(v); singular at v = 1, used only as a cross-check."""
    P = Params(beta)
    return math.sqrt((P.R(v) - P.alpha * v) / (1 - v * v) ** 2)


def r_of_v(v, beta):
    P = Params(beta)
    w = v * v
    g = w * w + (P.gamma + 1 - P.c0) * w + P.c0
    R = P.R(v)
    return v * g / (R * (P.alpha / 2 * (1 + w) + v * R))


def r_of_v_raw(v, beta):
    """Unsimplified r(v), singular at v = 1."""
    P = Params(beta)
    return v / (1 - v * v) * (P.alpha / 2 * (1 + v * v) / P.R(v) - v)


def dr_dv(v, beta):
    P = Params(beta)
    w = v * v
    k1 = P.gamma + 1 - P.c0
    g = w * w + k1 * w + P.c0
    dg = 2 * w + k1
    N = v * g
    dN = g + 2 * w * dg
    R, dR = P.R(v), P.dR(v)
    E = P.alpha / 2 * (1 + w) + v * R
    dE = P.alpha * v + R + v * dR
    D = R * E
    dD = dR * E + R * dE
    return (dN * D - N * dD) / (D * D)


def v_of_r(r, beta):
    if not 0 < r < 1:
        raise ValueError("r must lie in (0, 1), got %r" % (r,))
    if r == 0.5:
        return 1.0
    s = bisect(lambda x: r_of_v(math.exp(x), beta) - r, -60.0, 60.0)
    return math.exp(s)


def F1(r, beta):
    v = v_of_r(r, beta)
    return -math.log(u_of_v(v, beta)) - r * math.log(v)


def F1_prime(r, beta):
    return -math.log(v_of_r(r, beta))


def F1_second(r, beta):
    v = v_of_r(r, beta)
    return -1 / (v * dr_dv(v, beta))


def F1_max(beta):
    """Value at r = 1/2, where v = 1."""
    return 0.5 * math.log(2 * (1 + beta) / math.sqrt(beta))


def log_uv(z, beta):
    if z <= 0:
        return -math.inf
    v = v_of_r(z, beta)
    return math.log(u_of_v(v, beta) * v)


# --- two-refined -------------------------------------------------------------

def _zs(xi, r, s):
    return (r - xi) / (1 - xi), (s - xi) / (1 - xi)


def H(xi, r, s, beta):
    P = Params(beta)
    zr, zs = _zs(xi, r, s)
    return (1 - xi) * (0.5 * math.log(P.c) + F1(zr, beta) + F1(zs, beta))


def H_prime(xi, r, s, beta):
    P = Params(beta)
    zr, zs = _zs(xi, r, s)
    return 0.5 * math.log(1 / P.c) + log_uv(zr, beta) + log_uv(zs, beta)


def H_second(xi, r, s, beta):
    zr, zs = _zs(xi, r, s)
    d = (1 - xi) ** 3
    return ((1 - r) ** 2 * F1_second(zr, beta) + (1 - s) ** 2 * F1_second(zs, beta)) / d


def H_and_derivatives(xi, r, s, beta):
    if not 0 <= xi < min(r, s) < 1:
        raise ValueError("need 0 <= xi < min(r, s) < 1")
    return H(xi, r, s, beta), H_prime(xi, r, s, beta), H_second(xi, r, s, beta)


def xi_star(r, s, beta):
    """Maximizer of H on [0, min(r, s)); 0 when H'(0) <= 0."""
    if H_prime(0.0, r, s, beta) <= 0:
        return 0.0
    hi = min(r, s) - 1e-12
    return bisect(lambda x: H_prime(x, r, s, beta), 0.0, hi)


def F2(r, s, beta):
    """(value, branch) with branch 'interior' or 'boundary'."""
    if not (0.5 <= r < 1 and 0.5 <= s < 1):
        raise ValueError("r, s must lie in [1/2, 1)")
    x = xi_star(r, s, beta)
    if x == 0.0:
        return F2_boundary(r, s, beta), "boundary"
    return H(x, r, s, beta), "interior"


def F2_boundary(r, s, beta):
    return 0.5 * math.log(Params(beta).c) + F1(r, beta) + F1(s, beta)


# --- tangency curve ----------------------------------------------------------

def v_s_of_v_r(vr, beta):
    """Positive root of v_s^2 - 2 alpha v_r/(v_r^2 - 1) v_s - 1 = 0."""
    P = Params(beta)
    h = P.alpha * vr / (vr * vr - 1)
    return h + math.sqrt(h * h + 1)


def s_of_v_r(vr, beta):
    P = Params(beta)
    return 0.5 + math.sqrt(P.beta) / (1 + P.beta) * P.R(vr) / (vr * (1 + vr * vr))


def tangency_s(r, beta):
    """(s, degenerate) on the tangency curve; r = 1/2 is the degenerate end with s = 1."""
    if r == 0.5:
        return 1.0, True
    if not 0.5 < r < 1:
        raise ValueError("r must lie in (1/2, 1)")
    vr = v_of_r(r, beta)
    return s_of_v_r(vr, beta), False


def tangency_residual(r, beta):
    """|log(uv(r) uv(s)) - log sqrt(c)| on the curve."""
    s, _ = tangency_s(r, beta)
    return abs(log_uv(r, beta) + log_uv(s, beta) - 0.5 * math.log(Params(beta).c))


def normalized_ab(beta):
    """(a, b) with ab = 1 and a^2/b^2 = beta."""
    a = beta ** 0.25
    return a, 1 / a


def phi(r, s, beta):
    """Negativity functional; zero on the tangency curve, negative below it."""
    a, b = normalized_ab(beta)
    t = (s - r) / (2 - r - s)
    L = L_of_t(t, a, b)[0]
    return F2_boundary(r, s, beta) - (2 - r - s) * L


def directional_phi(r, s, beta, h=1e-6):
    """(1 - r) d/dr + (1 - s) d/ds of phi, by central differences along the ray."""
    f = lambda e: phi(r + e * (1 - r), s + e * (1 - s), beta)
    return (f(h) - f(-h)) / (2 * h)


def appendix_residuals(r, s, beta):
    """Residuals of the two v-identities at (r, s), using v at the rescaled points.

    Returns (first, second, x_err, y_err): the last two compare
    x = 1/sqrt(v_r v_s) and y = sqrt(v_s/v_r) (for ab = 1) with L_of_t.
    """
    P = Params(beta)
    x = xi_star(r, s, beta)
    zr, zs = _zs(x, r, s)
    vr, vs = v_of_r(zr, beta), v_of_r(zs, beta)
    t = (s - r) / (2 - r - s)
    first = (vr * vr - 1) * (vs * vs - 1) - 2 * P.alpha * vr * vs
    second = t * (1 - vr * vr * vs * vs) - (vr * vr - vs * vs)
    a, b = normalized_ab(beta)
    _, xt, yt = L_of_t(t, a, b)
    return (abs(first) / max(1.0, abs(2 * P.alpha * vr * vs)),
            abs(second) / max(1.0, abs(vr * vr - vs * vs)),
            abs(xt - 1 / math.sqrt(vr * vs)) / xt,
            abs(yt - math.sqrt(vs / vr)) / yt)
