"""Hypothesis strategies for gluing matrices and M_{a,b} parameters."""

from hypothesis import assume, strategies as st

nonzero = st.integers(-50, 50).filter(bool)


@st.composite
def gluings(draw, bound=50):
    """(a, b, c, d) with ab - cd = -1, c >= 1, a, b, d nonzero, entries within bound."""
    a, b = draw(nonzero), draw(nonzero)
    n = a * b + 1
    assume(n != 0)
    divisors = [c for c in range(1, bound + 1) if n % c == 0 and abs(n // c) <= bound]
    assume(divisors)
    c = draw(st.sampled_from(divisors))
    return a, b, c, n // c


ab_pairs = st.tuples(st.integers(-50, 50), st.integers(-50, 50))
same_parity_pairs = ab_pairs.filter(lambda ab: (ab[0] - ab[1]) % 2 == 0)
