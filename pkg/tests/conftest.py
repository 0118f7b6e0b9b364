from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


def rationals(lo=1, hi=9):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, hi))
