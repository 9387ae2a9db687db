from fractions import Fraction

import pytest
from hypothesis import strategies as st

from homweyl.notation import parse
from homweyl.weyl import TwistParameter, WeylElement


def P(text, n=1):
    return parse(text, n)


rationals = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 10))
nonzero_rationals = rationals.filter(bool)


@st.composite
def exponent(draw, n, total):
    exp = [0] * n
    for _ in range(total):
        exp[draw(st.integers(0, n - 1))] += 1
    return tuple(exp)


@st.composite
def elements(draw, n, max_degree=3, max_terms=4, constant_coefficients=False):
    """Random element of A_n whose monomials y^b x^a have |a| + |b| <= max_degree."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        total = draw(st.integers(0, max_degree))
        ydeg = 0 if constant_coefficients else draw(st.integers(0, total))
        xexp = draw(exponent(n, total - ydeg))
        yexp = draw(exponent(n, ydeg))
        slot = terms.setdefault(xexp, {})
        slot[yexp] = slot.get(yexp, 0) + draw(rationals)
    return WeylElement(n, terms)


def twists(n, all_nonzero=True):
    comp = nonzero_rationals if all_nonzero else rationals
    return st.lists(comp, min_size=n, max_size=n).filter(any).map(TwistParameter)


@st.composite
def element_tuples(draw, count, ns=(1, 2, 3), max_degree=3, with_twist=True, **kwargs):
    n = draw(st.sampled_from(ns))
    items = [draw(elements(n, max_degree, **kwargs)) for _ in range(count)]
    if with_twist:
        items.append(draw(twists(n)))
    return tuple(items)


@pytest.fixture
def k1():
    return TwistParameter([1])
