from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def fraction_vectors(n):
    return st.lists(small_rats, min_size=n, max_size=n).map(tuple)


__all__ = ["Fraction", "small_rats", "fraction_vectors"]
