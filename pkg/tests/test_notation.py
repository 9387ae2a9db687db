import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elements
from homweyl.errors import ParseError
from homweyl.notation import parse, print_canonical
from homweyl.weyl import WeylElement


class TestParse:
    def test_product_normal_orders(self):
        assert parse("x1*y1", 1) == WeylElement(1, {(1,): {(1,): 1}, (0,): {(0,): 1}})

    def test_rational(self):
        assert parse("3/2") == WeylElement.constant(1, "3/2")

    def test_evaluates_and_normalizes(self):
        assert parse("(y1 + 1)*x1^2 - x1^2") == WeylElement.monomial((1,), (2,))

    def test_whitespace_insensitive(self):
        assert parse(" x1 *  y1+2 ") == parse("x1*y1+2")

    def test_leading_sign_and_nesting(self):
        assert parse("-(x1 - 1) * 2") == parse("2 - 2*x1")
        assert parse("+x1") == parse("x1")

    def test_power_of_sum(self):
        assert parse("(x1 + y1)^2") == parse("x1*x1 + x1*y1 + y1*x1 + y1*y1")

    def test_products_left_to_right(self):
        assert parse("x1*y1*x1") == parse("(x1*y1)*x1") == parse("y1*x1^2 + x1")

    @pytest.mark.parametrize("text,pos", [
        ("2x1", 1),
        ("x1 y1", 3),
        ("x1 +", 4),
        ("(x1", 3),
        ("x", 0),
        ("x1 % 2", 3),
        ("x1^y1", 3),
        ("1/0", 2),
        ("", 0),
    ])
    def test_syntax_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse(text, 1)
        assert info.value.position == pos

    def test_subscript_out_of_range(self):
        with pytest.raises(ParseError, match="exceeds n = 2"):
            parse("x1 + y3", 2)

    def test_unknown_subscript(self):
        with pytest.raises(ParseError, match="unknown variable"):
            parse("x0", 2)


class TestPrint:
    def test_basic(self):
        assert print_canonical(parse("x1*y1")) == "y1*x1 + 1"

    def test_zero(self):
        assert print_canonical(WeylElement.zero(3)) == "0"

    def test_grlex_order_of_x_terms(self):
        s = print_canonical(parse("x2^2 + x1*x2", 2))
        assert s == "x1*x2 + x2^2"

    def test_coefficients(self):
        assert print_canonical(parse("-3/2*y1^2*x1 + 1/3 - y1")) == "-3/2*y1^2*x1 - y1 + 1/3"
        assert print_canonical(parse("-1")) == "-1"
        assert print_canonical(parse("y2^3*y1*x2*x1", 2)) == "y1*y2^3*x1*x2"

    def test_y_terms_grlex_descending(self):
        assert print_canonical(parse("y2 + y1 + y1*y2 + 1", 2)) == "y1*y2 + y1 + y2 + 1"


@settings(max_examples=300)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), elements(n, max_degree=5))))
def test_round_trip(data):
    n, p = data
    assert parse(print_canonical(p), n) == p


@settings(max_examples=200)
@given(st.integers(1, 2).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_printing_injective(pair):
    a, b = pair
    assert (print_canonical(a) == print_canonical(b)) == (a == b)
