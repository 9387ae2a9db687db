"""Seeded random elements for property checks."""

import random
from fractions import Fraction

from homweyl.weyl import TwistParameter, WeylElement


def random_rational(rng: random.Random, bound: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if c or not nonzero:
            return c


def random_element(rng: random.Random, n: int, max_degree: int = 3, max_terms: int = 4,
                   bound: int = 10, constant_coefficients: bool = False) -> WeylElement:
    """Sum of up to ``max_terms`` monomials y^b x^a with |a| + |b| <= max_degree.

    A repeated monomial keeps its last coefficient, so every coefficient stays
    within ``bound``.
    """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_degree)
        ydeg = 0 if constant_coefficients else rng.randint(0, total)
        xexp = _random_exponent_exact(rng, n, total - ydeg)
        yexp = _random_exponent_exact(rng, n, ydeg)
        slot = terms.setdefault(xexp, {})
        slot[yexp] = random_rational(rng, bound)
    return WeylElement(n, terms)


def _random_exponent_exact(rng: random.Random, n: int, total: int):
    exp = [0] * n
    for _ in range(total):
        exp[rng.randrange(n)] += 1
    return tuple(exp)


def random_nonzero_element(rng: random.Random, n: int, **kwargs) -> WeylElement:
    while True:
        p = random_element(rng, n, **kwargs)
        if p:
            return p


def random_twist(rng: random.Random, n: int, bound: int = 5,
                 all_nonzero: bool = True) -> TwistParameter:
    """Random k; ``all_nonzero=False`` allows zero components but not k = 0."""
    while True:
        k = [random_rational(rng, bound, nonzero=all_nonzero) for _ in range(n)]
        if any(k):
            return TwistParameter(k)
