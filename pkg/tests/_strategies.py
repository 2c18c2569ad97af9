import random
from fractions import Fraction

from hypothesis import strategies as st

from deltaproof.polynomial import Polynomial

nonzero = st.integers(-99, 99).filter(bool)
rationals = st.builds(Fraction, st.integers(-99, 99), nonzero)


def polynomials(max_degree=8, var="x"):
    return st.lists(rationals, max_size=max_degree + 1).map(lambda cs: Polynomial(cs, var))


def random_rational(rng: random.Random) -> Fraction:
    den = 0
    while den == 0:
        den = rng.randint(-99, 99)
    return Fraction(rng.randint(-99, 99), den)


def random_polynomial(rng: random.Random, degree: int, var="x") -> Polynomial:
    """Polynomial of exactly ``degree`` (nonzero leading coefficient)."""
    cs = [random_rational(rng) for _ in range(degree)]
    lead = Fraction(0)
    while lead == 0:
        lead = random_rational(rng)
    return Polynomial(cs + [lead], var)
