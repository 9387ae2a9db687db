"""Text form of Weyl algebra elements.

Grammar (whitespace is ignored, products must be written with ``*``)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := nat ('/' nat)? | 'x' nat | 'y' nat | '(' expr ')'

Products are evaluated left to right in A_n, so ``x1*y1`` parses to
``y1*x1 + 1``.  The canonical printer emits terms in descending grlex order
of the x-exponent and, inside each coefficient, descending grlex order of the
y-exponent; ``parse(print_canonical(p), p.n) == p``.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Union

from homweyl.errors import ParseError
from homweyl.weyl import WeylElement, grlex_key, mul_assoc

_TOKEN = re.compile(r"(?:(?P<num>\d+)|(?P<var>[xy])(?P<sub>\d+)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", "y", an operator character, or "end"
    value: Union[int, str, None]
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            tokens.append(Token("end", None, pos))
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = text[pos]
            if bad in "xy":
                raise ParseError(f"variable {bad!r} needs a numeric subscript", text, pos)
            raise ParseError(f"unexpected character {bad!r}", text, pos)
        start = pos
        if m.group("num") is not None:
            tokens.append(Token("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            tokens.append(Token(m.group("var"), int(m.group("sub")), start))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), start))
        pos = m.end()


# -- syntax tree -------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    kind: str  # "x" or "y"
    index: int  # 1-based
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node)


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(self.tok)}", self.text, self.tok.pos)
        return self.advance()

    @staticmethod
    def _describe(t: Token) -> str:
        if t.kind == "end":
            return "end of input"
        if t.kind in ("x", "y"):
            return f"'{t.kind}{t.value}'"
        return repr(str(t.value))

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe(self.tok)}", self.text, self.tok.pos)
        return node

    def expr(self):
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        terms = [(sign, self.term())]
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.tok.kind == "*":
            self.advance()
            factors.append(self.factor())
        if self.tok.kind in ("num", "x", "y", "("):
            raise ParseError("implicit multiplication is not allowed; use '*'", self.text, self.tok.pos)
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            exponent = self.expect("num").value
            return Power(base, exponent)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = Fraction(t.value)
            if self.tok.kind == "/":
                self.advance()
                den = self.expect("num")
                if den.value == 0:
                    raise ParseError("zero denominator", self.text, den.pos)
                value = Fraction(t.value, den.value)
            return Num(value)
        if t.kind in ("x", "y"):
            self.advance()
            return Var(t.kind, t.value, t.pos)
        if t.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {self._describe(t)}", self.text, t.pos)


def parse_ast(text: str):
    return _Parser(text).parse()


def evaluate_ast(node, n: int, text: str = "") -> WeylElement:
    if isinstance(node, Num):
        return WeylElement.constant(n, node.value)
    if isinstance(node, Var):
        if node.index < 1:
            raise ParseError(f"unknown variable {node.kind}{node.index}", text, node.pos)
        if node.index > n:
            raise ParseError(f"variable {node.kind}{node.index} exceeds n = {n}", text, node.pos)
        return (WeylElement.x if node.kind == "x" else WeylElement.y)(node.index, n)
    if isinstance(node, Sum):
        acc = WeylElement.zero(n)
        for sign, sub in node.terms:
            value = evaluate_ast(sub, n, text)
            acc = acc + value if sign > 0 else acc - value
        return acc
    if isinstance(node, Product):
        acc = evaluate_ast(node.factors[0], n, text)
        for sub in node.factors[1:]:
            acc = mul_assoc(acc, evaluate_ast(sub, n, text))
        return acc
    if isinstance(node, Power):
        return evaluate_ast(node.base, n, text) ** node.exponent
    raise TypeError(f"unknown node {node!r}")


def parse(text: str, n: int = 1) -> WeylElement:
    """Parse ``text`` as an element of A_n."""
    return evaluate_ast(parse_ast(text), n, text)


# -- printing ----------------------------------------------------------------

def _monomial(kind: str, exp) -> List[str]:
    out = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            out.append(f"{kind}{i}")
        elif e > 1:
            out.append(f"{kind}{i}^{e}")
    return out


def format_rational(c: Fraction) -> str:
    return str(c)


def print_canonical(p: WeylElement) -> str:
    pieces = []
    for xexp in sorted(p.terms, key=grlex_key, reverse=True):
        f = p.terms[xexp]
        for yexp in sorted(f.terms, key=grlex_key, reverse=True):
            c = f.terms[yexp]
            factors = _monomial("y", yexp) + _monomial("x", xexp)
            magnitude = abs(c)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            pieces.append((c < 0, body))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
