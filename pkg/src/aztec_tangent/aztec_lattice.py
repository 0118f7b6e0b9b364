"""Face-weighted Aztec diamonds and the octahedron recurrence.

Faces of the extended diamond of order n are integer points (k, l) with
|k| + |l| <= n.  Faces with |k| + |l| = n sit on the boundary.
"""
from fractions import Fraction

from .exact_algebra import as_rational


def faces(n):
    return [(k, l) for k in range(-n, n + 1) for l in range(-n, n + 1)
            if abs(k) + abs(l) <= n]


class FaceWeightGrid:
    """Nonzero exact weights on every face of the extended diamond."""

    def __init__(self, n, weights):
        self.n = n
        w = {}
        for f in faces(n):
            if f not in weights:
                raise ValueError("missing weight for face %r" % (f,))
            x = as_rational(weights[f])
            if x == 0:
                raise ValueError("face %r has zero weight" % (f,))
            w[f] = x
        self.weights = w

    def __call__(self, k, l):
        return self.weights[(k, l)]

    def is_boundary(self, k, l):
        return abs(k) + abs(l) == self.n


def uniform_grid(n):
    return FaceWeightGrid(n, {f: 1 for f in faces(n)})


def two_periodic_weight(n, k, l, a, b):
    if abs(k) + abs(l) == n:
        return Fraction(1)
    if n % 2 == 1:
        if (k + l) % 2:
            return Fraction(1)
        return a if k % 2 == 0 else b
    if (k + l) % 2 == 0:
        return Fraction(1)
    return a if k % 2 == 0 else b


def two_periodic_grid(n, a, b):
    a, b = as_rational(a), as_rational(b)
    if a <= 0 or b <= 0:
        raise ValueError("two-periodic weights must be positive")
    return FaceWeightGrid(n, {(k, l): two_periodic_weight(n, k, l, a, b)
                              for (k, l) in faces(n)})


def octahedron_evolve(grid, n=None):
    """All sub-diamond partition functions T_{m;i,j} for m <= n.

    Returns a list ``levels`` with ``levels[m]`` a dict {(i, j): T}.  The
    full-diamond value is ``levels[n][(0, 0)]``.
    """
    if n is None:
        n = grid.n
    if n > grid.n:
        raise ValueError("grid of order %d cannot host level %d" % (grid.n, n))
    N = grid.n
    x = grid.weights

    def centers(m):
        return [(i, j) for (i, j) in faces(N - m) if (i + j - (N - m)) % 2 == 0]

    levels = [{c: Fraction(1) for c in centers(0)}]
    if n == 0:
        return levels
    lvl1 = {}
    for (i, j) in centers(1):
        lvl1[(i, j)] = (x[(i, j - 1)] * x[(i, j + 1)] + x[(i - 1, j)] * x[(i + 1, j)]) / x[(i, j)]
    levels.append(lvl1)
    for m in range(2, n + 1):
        prev, prev2 = levels[m - 1], levels[m - 2]
        cur = {}
        for (i, j) in centers(m):
            d = prev2[(i, j)]
            if d == 0:
                raise ZeroDivisionError("singular weights at level %d, center %r" % (m, (i, j)))
            cur[(i, j)] = (prev[(i + 1, j)] * prev[(i - 1, j)]
                           + prev[(i, j + 1)] * prev[(i, j - 1)]) / d
        levels.append(cur)
    return levels


def octahedron_top(grid):
    return octahedron_evolve(grid)[grid.n][(0, 0)]


def T_closed(n, a, b):
    a, b = as_rational(a), as_rational(b)
    val = (2 / (a * b)) ** ((n + 1) ** 2 // 4) * (a * a + b * b) ** (n * n // 4)
    if n % 4 == 1:
        val *= b
    elif n % 4 == 3:
        val *= a
    return val


def Z_closed(n, a, b):
    a, b = as_rational(a), as_rational(b)
    val = (2 * a * b) ** ((n + 1) ** 2 // 4) * (a * a + b * b) ** (n * n // 4)
    if n % 4 == 1:
        val *= a / b
    return val
