"""Normal-form arithmetic in the Weyl algebra A_n over the rationals.

An element is stored as a finite map from x-exponent vectors to polynomials
in y_1..y_n, with every y written to the left of every x::

    p = sum_l p_l(y) * x_1^l_1 ... x_n^l_n

Each generator pair satisfies x_i y_i = y_i x_i + 1; all other pairs commute.
Zero coefficients are never stored, so structural equality is algebraic
equality.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from homweyl.errors import DimensionError

MultiIndex = Tuple[int, ...]
Scalar = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a Fraction.

    Floats are rejected: every coefficient has to be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"inexact or boolean scalar {value!r}")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


# -- graded lexicographic order --------------------------------------------

def grlex_key(a: MultiIndex):
    """Sort key: total degree first, then plain lexicographic comparison.

    Under this key (1, 0, ..., 0) > (0, 1, ..., 0) > ... > (0, ..., 0, 1).
    """
    return (sum(a), tuple(a))


def grlex_cmp(a: MultiIndex, b: MultiIndex) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"multi-indices of lengths {len(a)} and {len(b)}")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def grlex_max(indices: Iterable[MultiIndex]) -> Optional[MultiIndex]:
    indices = list(indices)
    if not indices:
        return None
    return max(indices, key=grlex_key)


def _add_index(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(i + j for i, j in zip(a, b))


def _check_index(a, n: int) -> MultiIndex:
    a = tuple(int(e) for e in a)
    if len(a) != n:
        raise DimensionError(f"multi-index {a} does not have length {n}")
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")
    return a


# -- polynomials in y_1..y_n -------------------------------------------------

class YPoly:
    """Commutative polynomial in y_1..y_n with rational coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[MultiIndex, Scalar]] = None):
        clean = {}
        for exp, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                exp = _check_index(exp, n)
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = c
                else:
                    del clean[exp]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "YPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "YPoly":
        c = as_rational(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "YPoly":
        """The monomial y_{i+1}^power (``i`` is 0-based)."""
        exp = [0] * n
        exp[i] = power
        return cls._raw(n, {tuple(exp): Fraction(1)})

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, YPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == YPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"YPoly({self.n}, {self._terms!r})"

    def is_constant(self) -> bool:
        return not self._terms or list(self._terms) == [(0,) * self.n]

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if it is not constant."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.n, Fraction(0))

    def degree(self) -> Optional[MultiIndex]:
        """Grlex-largest exponent, or None for the zero polynomial."""
        return grlex_max(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _check(self, other: "YPoly"):
        if other.n != self.n:
            raise DimensionError(f"polynomials in {self.n} and {other.n} variables")

    def __add__(self, other):
        if not isinstance(other, YPoly):
            other = YPoly.constant(self.n, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return YPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return YPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, YPoly):
            other = YPoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "YPoly":
        c = as_rational(c)
        if not c:
            return YPoly._raw(self.n, {})
        return YPoly._raw(self.n, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, YPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_index(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return YPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, offsets: Sequence[Fraction]) -> "YPoly":
        """Substitute y_i -> y_i + offsets[i] and re-expand."""
        if len(offsets) != self.n:
            raise DimensionError(f"{len(offsets)} offsets for {self.n} variables")
        if not any(offsets):
            return self
        out = {}
        for exp, c in self._terms.items():
            # expansion of each (y_i + o_i)^e_i as a list of (power, coefficient)
            factors = [
                [(j, comb(e, j) * o ** (e - j)) for j in range(e + 1)] if o else [(e, 1)]
                for e, o in zip(exp, offsets)
            ]
            for choice in product(*factors):
                coeff = c
                for _, f in choice:
                    coeff *= f
                if coeff:
                    key = tuple(j for j, _ in choice)
                    out[key] = out.get(key, 0) + coeff
        return YPoly._raw(self.n, {e: c for e, c in out.items() if c})


# -- twist parameters --------------------------------------------------------

class TwistParameter:
    """The vector k in Q^n defining alpha_k(x_i) = x_i, alpha_k(y_i) = y_i + k_i."""

    __slots__ = ("k",)

    def __init__(self, k: Iterable[Scalar]):
        self.k = tuple(as_rational(c) for c in k)

    @classmethod
    def of(cls, k, n: Optional[int] = None) -> "TwistParameter":
        """Accept a TwistParameter, a sequence, or a scalar broadcast to length ``n``."""
        if isinstance(k, TwistParameter):
            tw = k
        elif isinstance(k, (int, Fraction, str)):
            if n is None:
                raise ValueError("a scalar twist needs an explicit n")
            tw = cls([k] * n)
        else:
            tw = cls(k)
        if n is not None and tw.n != n:
            raise DimensionError(f"twist of length {tw.n} used with n = {n}")
        return tw

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def all_nonzero(self) -> bool:
        return all(self.k)

    @property
    def some_nonzero(self) -> bool:
        return any(self.k)

    @property
    def pivot(self) -> Optional[int]:
        """0-based index of the first non-zero component."""
        for i, c in enumerate(self.k):
            if c:
                return i
        return None

    def __iter__(self):
        return iter(self.k)

    def __len__(self):
        return len(self.k)

    def __getitem__(self, i):
        return self.k[i]

    def __eq__(self, other):
        if isinstance(other, TwistParameter):
            return self.k == other.k
        return NotImplemented

    def __hash__(self):
        return hash(self.k)

    def __repr__(self):
        return f"TwistParameter({[str(c) for c in self.k]})"

    def __str__(self):
        return ",".join(str(c) for c in self.k)


# -- Weyl algebra elements ---------------------------------------------------

class WeylElement:
    """An element of A_n in normal form (y's to the left of x's)."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping] = None):
        """``terms`` maps x-exponents to YPoly or to ``{y-exponent: coefficient}``."""
        if n < 0:
            raise ValueError("n must be non-negative")
        clean = {}
        for xexp, coeff in (terms or {}).items():
            xexp = _check_index(xexp, n)
            if not isinstance(coeff, YPoly):
                coeff = YPoly(n, coeff)
            elif coeff.n != n:
                raise DimensionError(f"coefficient in {coeff.n} variables, element in {n}")
            if xexp in clean:
                coeff = clean[xexp] + coeff
            if coeff:
                clean[xexp] = coeff
            else:
                clean.pop(xexp, None)
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "WeylElement":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _from_nested(cls, n: int, nested: dict) -> "WeylElement":
        """Build from ``{xexp: {yexp: Fraction}}``, dropping zeros."""
        out = {}
        for xexp, ys in nested.items():
            ys = {e: c for e, c in ys.items() if c}
            if ys:
                out[xexp] = YPoly._raw(n, ys)
        return cls._raw(n, out)

    @classmethod
    def zero(cls, n: int) -> "WeylElement":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "WeylElement":
        c = as_rational(c)
        if not c:
            return cls.zero(n)
        return cls._raw(n, {(0,) * n: YPoly.constant(n, c)})

    @classmethod
    def one(cls, n: int) -> "WeylElement":
        return cls.constant(n, 1)

    @classmethod
    def x(cls, i: int, n: int) -> "WeylElement":
        """The generator x_i, with 1-based ``i``."""
        if not 1 <= i <= n:
            raise DimensionError(f"x{i} does not exist in A_{n}")
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw(n, {tuple(exp): YPoly.constant(n, 1)})

    @classmethod
    def y(cls, i: int, n: int) -> "WeylElement":
        """The generator y_i, with 1-based ``i``."""
        if not 1 <= i <= n:
            raise DimensionError(f"y{i} does not exist in A_{n}")
        return cls._raw(n, {(0,) * n: YPoly.variable(i - 1, n)})

    @classmethod
    def monomial(cls, yexp: MultiIndex, xexp: MultiIndex, c: Scalar = 1) -> "WeylElement":
        """c * y^yexp * x^xexp."""
        n = len(xexp)
        if len(yexp) != n:
            raise DimensionError("y- and x-exponents of different lengths")
        return cls(n, {tuple(xexp): {tuple(yexp): c}})

    @classmethod
    def from_ypoly(cls, f: YPoly, xexp: Optional[MultiIndex] = None) -> "WeylElement":
        xexp = (0,) * f.n if xexp is None else tuple(xexp)
        return cls._raw(f.n, {xexp: f} if f else {})

    @property
    def terms(self) -> Mapping[MultiIndex, YPoly]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, xexp: MultiIndex) -> YPoly:
        return self._terms.get(tuple(xexp), YPoly._raw(self.n, {}))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        """True for elements of K (including zero)."""
        if not self._terms:
            return True
        return list(self._terms) == [(0,) * self.n] and self._terms[(0,) * self.n].is_constant()

    def has_constant_coefficients(self) -> bool:
        """True when every coefficient polynomial lies in K, i.e. deg_y is zero."""
        return all(f.is_constant() for f in self._terms.values())

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == WeylElement.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from homweyl.notation import print_canonical

        return f"WeylElement({self.n}, {print_canonical(self)!r})"

    def __str__(self):
        from homweyl.notation import print_canonical

        return print_canonical(self)

    def _coerce(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.n != self.n:
                raise DimensionError(f"elements of A_{self.n} and A_{other.n}")
            return other
        return WeylElement.constant(self.n, other)

    def __add__(self, other):
        return linear_combine([(1, self), (1, self._coerce(other))])

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.n, {e: -f for e, f in self._terms.items()})

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, self._coerce(other))])

    def __rsub__(self, other):
        return linear_combine([(-1, self), (1, self._coerce(other))])

    def scale(self, c: Scalar) -> "WeylElement":
        c = as_rational(c)
        if not c:
            return WeylElement.zero(self.n)
        return WeylElement._raw(self.n, {e: f.scale(c) for e, f in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return mul_assoc(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars are central, so left and right scaling agree
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in A_n")
        result = WeylElement.one(self.n)
        base = self
        while e:
            if e & 1:
                result = mul_assoc(result, base)
            e >>= 1
            if e:
                base = mul_assoc(base, base)
        return result


def _same_n(*elements: WeylElement) -> int:
    ns = {p.n for p in elements}
    if len(ns) > 1:
        raise DimensionError(f"elements from Weyl algebras with n in {sorted(ns)}")
    return ns.pop()


def linear_combine(pairs: Iterable[Tuple[Scalar, WeylElement]]) -> WeylElement:
    """Return the normal form of sum(c * p for c, p in pairs)."""
    pairs = [(as_rational(c), p) for c, p in pairs]
    if not pairs:
        raise ValueError("linear_combine needs at least one pair")
    n = _same_n(*(p for _, p in pairs))
    acc = {}
    for c, p in pairs:
        if not c:
            continue
        for xexp, f in p._terms.items():
            slot = acc.setdefault(xexp, {})
            for yexp, v in f._terms.items():
                slot[yexp] = slot.get(yexp, 0) + c * v
    return WeylElement._from_nested(n, acc)


@lru_cache(maxsize=4096)
def _reorder_pair(a: int, b: int):
    """x^a y^b = sum_t C(a,t) C(b,t) t! y^(b-t) x^(a-t), as (t, coefficient) pairs."""
    return tuple((t, comb(a, t) * comb(b, t) * factorial(t)) for t in range(min(a, b) + 1))


@lru_cache(maxsize=65536)
def _reorder(xexp: MultiIndex, yexp: MultiIndex):
    """Normal form of x^xexp * y^yexp as (coefficient, y-exponent, x-exponent) triples.

    Distinct index pairs commute, so the single-pair formula multiplies out
    across coordinates.
    """
    per_coord = [_reorder_pair(a, b) for a, b in zip(xexp, yexp)]
    out = []
    for choice in product(*per_coord):
        coeff = 1
        for _, c in choice:
            coeff *= c
        ts = [t for t, _ in choice]
        out.append((
            coeff,
            tuple(b - t for b, t in zip(yexp, ts)),
            tuple(a - t for a, t in zip(xexp, ts)),
        ))
    return tuple(out)


def mul_assoc(a: WeylElement, b: WeylElement) -> WeylElement:
    """Associative product ``ab`` in A_n, returned in normal form."""
    n = _same_n(a, b)
    acc = {}
    for xa, pa in a._terms.items():
        for xb, qb in b._terms.items():
            for yq, cq in qb._terms.items():
                for coeff, ymid, xrest in _reorder(xa, yq):
                    xexp = _add_index(xrest, xb)
                    slot = acc.setdefault(xexp, {})
                    base = coeff * cq
                    for yp, cp in pa._terms.items():
                        yexp = _add_index(yp, ymid)
                        slot[yexp] = slot.get(yexp, 0) + base * cp
    return WeylElement._from_nested(n, acc)


def alpha_pow(p: WeylElement, k, e: int = 1) -> WeylElement:
    """Apply alpha_k^e: substitute y_i -> y_i + e*k_i, leave every x_i fixed."""
    k = TwistParameter.of(k, p.n)
    offsets = [e * c for c in k]
    if not any(offsets):
        return p
    return WeylElement._raw(p.n, {x: f.shift(offsets) for x, f in p._terms.items()})


def yau_mul(a: WeylElement, b: WeylElement, k) -> WeylElement:
    """Twisted product a * b = alpha_k(ab) of the hom-associative algebra A_n^k."""
    return alpha_pow(mul_assoc(a, b), k, 1)


class Degrees(NamedTuple):
    deg_x: Optional[MultiIndex]
    leading: Optional[YPoly]
    deg_y: Optional[MultiIndex]


def degrees(p: WeylElement) -> Degrees:
    """deg_x, the leading coefficient L(p) and deg_y; all None for p = 0."""
    if not p._terms:
        return Degrees(None, None, None)
    dx = grlex_max(p._terms)
    dy = grlex_max(e for f in p._terms.values() for e in f._terms)
    return Degrees(dx, p._terms[dx], dy)


def support(p: WeylElement) -> frozenset:
    """The set E(p) of x-exponents with non-zero coefficient."""
    return frozenset(p._terms)


def x_power(xexp: MultiIndex) -> WeylElement:
    """The monomial x^xexp."""
    n = len(xexp)
    return WeylElement._raw(n, {tuple(xexp): YPoly.constant(n, 1)})


@lru_cache(maxsize=65536)
def _reorder_reversed(yexp: MultiIndex, xexp: MultiIndex):
    """y^yexp x^xexp = sum_t (-1)^|t| prod C(a,t) C(b,t) t! x^(a-t) y^(b-t)."""
    out = []
    for coeff, ymid, xrest in _reorder(xexp, yexp):
        sign = -1 if (sum(yexp) - sum(ymid)) % 2 else 1
        out.append((sign * coeff, ymid, xrest))
    return tuple(out)


def right_coefficients(p: WeylElement) -> dict:
    """Coefficients of p written as sum_l x^l r_l(y), with the x's on the left.

    Right ideals cancel coefficients in this form, since (x^l c) r = x^l (c r)
    for a constant c and a polynomial r in the y's.
    """
    acc = {}
    for xexp, f in p._terms.items():
        for yexp, c in f._terms.items():
            for coeff, ymid, xrest in _reorder_reversed(yexp, xexp):
                slot = acc.setdefault(xrest, {})
                slot[ymid] = slot.get(ymid, 0) + c * coeff
    out = {}
    for xexp, ys in acc.items():
        ys = {e: c for e, c in ys.items() if c}
        if ys:
            out[xexp] = YPoly._raw(p.n, ys)
    return out
