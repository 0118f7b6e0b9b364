"""Bracketed bisection with failure diagnostics."""


class BracketError(ValueError):
    pass


def bisect(f, lo, hi, tol=1e-13, maxiter=200):
    """Root of f on [lo, hi] assuming a sign change.

    Stops when the bracket is shorter than ``tol`` (relative to its scale)
    or after ``maxiter`` halvings.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(
            "no sign change on [%r, %r]: f(lo)=%r f(hi)=%r" % (lo, hi, flo, fhi))
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if hi - lo <= tol * max(1.0, abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def grow_bracket(f, lo, hi, target_sign_at_hi, factor=2.0, limit=1e12):
    """Grow hi geometrically until sign(f(hi)) matches target_sign_at_hi."""
    while True:
        val = f(hi)
        if (val > 0) == (target_sign_at_hi > 0) and val != 0:
            return lo, hi
        lo, hi = hi, hi * factor
        if hi > limit:
            raise BracketError("bracket growth exceeded %g" % limit)
