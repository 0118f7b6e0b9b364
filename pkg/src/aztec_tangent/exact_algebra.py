"""Exact scalars, Laurent polynomials in one variable, and truncated bivariate series.

Scalars are ``fractions.Fraction``.  A ``LaurentPoly`` is a sparse map
exponent -> Fraction.  A ``BiSeries`` holds the coefficients of u^i v^j for
i + j <= order; its coefficients are either Fractions or LaurentPolys.
"""
from fractions import Fraction

ExactRational = Fraction


def as_rational(x):
    """Parse an int, Fraction or string like '3/4' into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError("cannot convert %r to an exact rational" % (x,))


class LaurentPoly:
    """Sparse Laurent polynomial in beta with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({exp: c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def degree_range(self):
        if not self.terms:
            return None
        return min(self.terms), max(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        """Inverse of a monomial; other Laurent polynomials are not units."""
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials are invertible in the Laurent ring")
        (e, c), = self.terms.items()
        return LaurentPoly({-e: 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return LaurentPoly({e: c / other for e, c in self.terms.items()})
        return self * self._coerce(other).inverse()

    def invert_variable(self):
        """Substitute beta -> 1/beta."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def evaluate(self, beta):
        return laurent_eval(self, beta)

    def evaluate_float(self, beta):
        return sum(float(c) * beta ** e for e, c in self.terms.items())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            parts.append("%s*b^%d" % (c, e) if e else str(c))
        return "LaurentPoly(" + " + ".join(parts) + ")"


BETA = LaurentPoly.monomial(1)


def laurent_eval(p, beta):
    """Exact value of a LaurentPoly at a nonzero rational beta."""
    beta = as_rational(beta)
    if beta == 0:
        raise ValueError("Laurent polynomial evaluated at beta = 0")
    total = Fraction(0)
    for e, c in p.terms.items():
        total += c * beta ** e
    return total


def _is_zero(c):
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return c == 0


def _invert_unit(c):
    if isinstance(c, LaurentPoly):
        return c.inverse()
    if c == 0:
        raise ZeroDivisionError("series divisor has zero constant term")
    return 1 / Fraction(c)


class BiSeries:
    """Power series in (u, v) truncated at total degree ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order):
        clean = {}
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in a power series")
            if i + j <= order and not _is_zero(c):
                clean[(i, j)] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @classmethod
    def from_terms(cls, terms, order):
        """Build from an iterable of (i, j, coeff) allowing repeated keys."""
        acc = {}
        for i, j, c in terms:
            acc[(i, j)] = acc.get((i, j), 0) + c
        return cls(acc, order)

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def truncate(self, order):
        return BiSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BiSeries(out, min(self.order, other.order))

    def __neg__(self):
        return BiSeries({k: -c for k, c in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return BiSeries({k: c * other for k, c in self.coeffs.items()}, self.order)
        order = min(self.order, other.order)
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                if i1 + j1 + i2 + j2 <= order:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, 0) + c1 * c2
        return BiSeries(out, order)

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        return BiSeries({k: fn(c) for k, c in self.coeffs.items()}, self.order)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = {k: c for k, c in self.coeffs.items() if sum(k) <= order}
        b = {k: c for k, c in other.coeffs.items() if sum(k) <= order}
        return a == b

    def __repr__(self):
        return "BiSeries(order=%d, %d terms)" % (self.order, len(self.coeffs))


def series_of_rational(num, den, order):
    """Expand num/den as a power series up to total degree ``order``.

    Graded long division: coefficients are solved degree by degree, so the
    result is exact whenever the coefficients are.
    """
    c0 = den[(0, 0)]
    inv0 = _invert_unit(c0)
    den_terms = [(k, c) for k, c in den.coeffs.items() if k != (0, 0)]
    out = {}
    for deg in range(order + 1):
        for i in range(deg + 1):
            j = deg - i
            acc = num[(i, j)]
            for (p, q), c in den_terms:
                if p <= i and q <= j:
                    prev = out.get((i - p, j - q))
                    if prev is not None:
                        acc = acc - c * prev
            if not _is_zero(acc):
                out[(i, j)] = acc * inv0
    return BiSeries(out, order)
