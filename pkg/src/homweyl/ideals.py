"""Constructive ideal theory of the hom-associative Weyl algebras A_n^k.

Every algorithm returns its outputs together with membership certificates in
both directions, so a caller can re-check that the old and new generating
sets produce the same one-sided ideal of A_n^k.

Two facts do all the work:

* alpha_k fixes every x_i, so an element whose coefficients are constants is
  alpha_k-invariant, and alpha_k(t) - t lowers the y-degree of the
  coefficients of t;
* for such an invariant q and any r in K[y], alpha_k^-1(r) * q = r q, so
  polynomial multiples of q stay inside the ideal.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from homweyl.certificates import (
    LEFT,
    RIGHT,
    Add,
    Alpha,
    Certificate,
    Gen,
    IdealPresentation,
    Scale,
    StarGen,
    add_all,
    compose_presentation_change,
    difference,
    evaluate_certificate,
    reindex,
    scale,
)
from homweyl.errors import (
    AllKZero,
    EmptyInput,
    KComponentZero,
    NonConstantGenerator,
    Stalled,
    ZeroInput,
)
from homweyl.hom import IdentityReport
from homweyl.weyl import (
    MultiIndex,
    TwistParameter,
    WeylElement,
    YPoly,
    _same_n,
    alpha_pow,
    degrees,
    grlex_key,
    linear_combine,
    mul_assoc,
    right_coefficients,
    x_power,
    yau_mul,
)


@dataclass(frozen=True)
class CertifiedGenerators:
    """A change of generating set, certified both ways."""

    old: IdealPresentation
    new: IdealPresentation
    new_in_old: Tuple[Certificate, ...]
    old_in_new: Tuple[Certificate, ...]

    @property
    def new_generators(self) -> Tuple[WeylElement, ...]:
        return self.new.generators

    def failures(self) -> List[str]:
        """Descriptions of every certificate that does not evaluate to its target."""
        bad = []
        for i, (cert, target) in enumerate(zip(self.new_in_old, self.new.generators)):
            if evaluate_certificate(cert, self.old) != target:
                bad.append(f"new generator {i} over the old presentation")
        for i, (cert, target) in enumerate(zip(self.old_in_new, self.old.generators)):
            if evaluate_certificate(cert, self.new) != target:
                bad.append(f"old generator {i} over the new presentation")
        if len(self.new_in_old) != len(self.new.generators):
            bad.append("certificate count differs from the number of new generators")
        if len(self.old_in_new) != len(self.old.generators):
            bad.append("certificate count differs from the number of old generators")
        return bad

    def verify(self) -> bool:
        return not self.failures()


@dataclass(frozen=True)
class DifferenceChain:
    """t, alpha(t) - t, ... and the generators recovered from it.

    ``coefficients[s][i]`` is the polynomial r with
    ``steps[s] = sum_i r * p_i`` (left) or ``sum_i p_i * r`` (right); entries
    with i < s are zero and omitted from the sum.  ``extracted`` lists the
    deduplicated generators in the order they are recovered, last one first.
    """

    steps: Tuple[WeylElement, ...]
    extracted: Tuple[WeylElement, ...]
    coefficients: Tuple[Tuple[YPoly, ...], ...]
    pivot: Optional[int]


def _side_product(side: str, r: WeylElement, g: WeylElement) -> WeylElement:
    return mul_assoc(r, g) if side == LEFT else mul_assoc(g, r)


def _polynomial_multiple(side: str, r: YPoly, cert: Certificate, k) -> Certificate:
    """Certificate for r q (left) or q r (right) from one for an alpha-invariant q."""
    if r.is_constant():
        return scale(r.constant_value(), cert)
    return StarGen(alpha_pow(WeylElement.from_ypoly(r), k, -1), cert)


def _leading_constant(g: WeylElement) -> Fraction:
    return degrees(g).leading.constant_value()


def _check_side(side: str):
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def flatten_leading(p: WeylElement, k, side: str = LEFT) -> Tuple[WeylElement, Certificate]:
    """Find p' in the ideal generated by p with deg_x(p') = deg_x(p) and L(p') = 1.

    While L(p) is not constant, p is replaced by alpha_k(p) - p, which keeps
    deg_x and lowers the degree of the leading coefficient.  A constant
    leading coefficient c is then removed with c^-1 * p (or p * c^-1).
    """
    _check_side(side)
    if p.is_zero():
        raise ZeroInput("flatten_leading needs a non-zero element")
    k = TwistParameter.of(k, p.n)
    if not k.some_nonzero:
        raise AllKZero("flatten_leading needs some k_i != 0")
    dx = degrees(p).deg_x
    cur, cert = p, Gen(0)
    while True:
        lead = cur.coefficient(dx)
        if lead.is_constant():
            c = lead.constant_value()
            if c == 1:
                return cur, cert
            inv = WeylElement.constant(p.n, 1 / c)
            if side == LEFT:
                return yau_mul(inv, cur, k), StarGen(inv, cert)
            return yau_mul(cur, inv, k), StarGen(inv, cert)
        if lead.shift(list(k)) == lead:
            raise Stalled(f"alpha_k fixes the non-constant leading coefficient of {cur}")
        cur, cert = alpha_pow(cur, k) - cur, difference(cert)


def _side_coefficients(side: str, p: WeylElement) -> dict:
    return dict(p.terms) if side == LEFT else right_coefficients(p)


def constant_generators(p: WeylElement, k, side: str = LEFT) -> CertifiedGenerators:
    """Replace the principal ideal generated by p with generators in K[x].

    Each round strips the y's from the remaining element by repeated
    differences q -> q - alpha_k(q), normalizes the result to leading
    coefficient 1, and cancels the grlex-smallest slot of its support from
    the remaining element with a polynomial multiple.  The support of the
    remaining element shrinks every round.  Right ideals read supports and
    coefficients with the x's on the left.
    """
    _check_side(side)
    if p.is_zero():
        raise ZeroInput("constant_generators needs a non-zero element")
    n = p.n
    k = TwistParameter.of(k, n)
    if not k.all_nonzero:
        raise KComponentZero(f"constant_generators needs every k_i != 0, k = ({k})")

    gens: List[WeylElement] = []
    gen_certs: List[Certificate] = []
    multipliers: List[YPoly] = []
    remaining, rem_cert = p, Gen(0)
    while not remaining.is_zero():
        q, q_cert = remaining, rem_cert
        while not q.has_constant_coefficients():
            nxt = q - alpha_pow(q, k)
            if nxt.is_zero():
                raise Stalled(f"alpha_k fixes {q}, which still has non-constant coefficients")
            q, q_cert = nxt, Add(q_cert, Scale(Fraction(-1), Alpha(q_cert)))
        lead = _leading_constant(q)
        q, q_cert = q.scale(1 / lead), scale(1 / lead, q_cert)

        slot = min(q.terms, key=grlex_key)
        r = _side_coefficients(side, remaining)[slot].scale(1 / q.coefficient(slot).constant_value())
        remaining = remaining - _side_product(side, WeylElement.from_ypoly(r), q)
        rem_cert = add_all([rem_cert, Scale(Fraction(-1), _polynomial_multiple(side, r, q_cert, k))])
        gens.append(q)
        gen_certs.append(q_cert)
        multipliers.append(r)

    old = IdealPresentation(side, n, k, (p,))
    new = old.with_generators(gens)
    p_cert = add_all([_polynomial_multiple(side, r, Gen(i), k) for i, r in enumerate(multipliers)])
    return CertifiedGenerators(old, new, tuple(gen_certs), (p_cert,))


def _normalized(g: WeylElement) -> Tuple[WeylElement, Fraction]:
    lead = _leading_constant(g)
    return g.scale(1 / lead), lead


def principal_from_constant(gens: Sequence[WeylElement], k, side: str = LEFT
                            ) -> Tuple[WeylElement, DifferenceChain, CertifiedGenerators]:
    """Combine generators with constant coefficients into one generator t.

    With y the y-variable of the first non-zero twist component, the
    deduplicated monic generators p_0, ..., p_{m-1} give
    t = sum y^i p_i (left) or sum p_i y^i (right).  Repeated differences of t
    peel off the generators from the last one backwards.
    """
    _check_side(side)
    gens = list(gens)
    if not gens:
        raise EmptyInput("principal_from_constant needs at least one generator")
    n = _same_n(*gens)
    k = TwistParameter.of(k, n)
    if not k.some_nonzero:
        raise AllKZero("principal_from_constant needs some k_i != 0")
    for g in gens:
        if g.is_zero():
            raise ZeroInput("generators must be non-zero")
        if not g.has_constant_coefficients():
            raise NonConstantGenerator(f"{g} has coefficients outside K")
    old = IdealPresentation(side, n, k, tuple(gens))

    unique: List[WeylElement] = []
    unique_certs: List[Certificate] = []
    placement = []  # original generator i equals factor * unique[j]
    for i, g in enumerate(gens):
        u, factor = _normalized(g)
        if u in unique:
            j = unique.index(u)
        else:
            j = len(unique)
            unique.append(u)
            unique_certs.append(scale(1 / factor, Gen(i)))
        placement.append((j, factor))
    m = len(unique)
    pivot = k.pivot
    y = WeylElement.y(pivot + 1, n)

    ypow = [y ** i for i in range(m)]
    t = linear_combine([(1, _side_product(side, ypow[i], u)) for i, u in enumerate(unique)])
    t_cert = add_all([
        unique_certs[0] if i == 0 else StarGen(alpha_pow(ypow[i], k, -1), unique_certs[i])
        for i in range(m)
    ])

    shift = list(k)
    coeffs = [[YPoly.variable(pivot, n, i) for i in range(m)]]
    steps = [t]
    step_certs: List[Certificate] = [Gen(0)]
    for s in range(1, m):
        prev = coeffs[-1]
        coeffs.append([YPoly(n) if i < s else prev[i].shift(shift) - prev[i] for i in range(m)])
        steps.append(alpha_pow(steps[-1], k) - steps[-1])
        step_certs.append(difference(step_certs[-1]))

    recovered: List[Optional[WeylElement]] = [None] * m
    recovered_certs: List[Optional[Certificate]] = [None] * m
    for s in range(m - 1, -1, -1):
        pivot_coeff = coeffs[s][s].constant_value()
        rest = [(1, steps[s])] + [
            (-1, _side_product(side, WeylElement.from_ypoly(coeffs[s][i]), recovered[i]))
            for i in range(s + 1, m)
        ]
        recovered[s] = linear_combine(rest).scale(1 / pivot_coeff)
        cert = add_all([step_certs[s]] + [
            Scale(Fraction(-1), _polynomial_multiple(side, coeffs[s][i], recovered_certs[i], k))
            for i in range(s + 1, m)
        ])
        recovered_certs[s] = scale(1 / pivot_coeff, cert)

    chain = DifferenceChain(
        steps=tuple(steps),
        extracted=tuple(recovered[s] for s in range(m - 1, -1, -1)),
        coefficients=tuple(tuple(row) for row in coeffs),
        pivot=pivot,
    )
    new = old.with_generators([t])
    old_in_new = tuple(scale(factor, recovered_certs[j]) for j, factor in placement)
    return t, chain, CertifiedGenerators(old, new, (t_cert,), old_in_new)


def generator_sort_key(g: WeylElement):
    """Ascending grlex order of deg_x, ties broken by the remaining terms.

    Only defined for elements with constant coefficients.
    """
    ordered = sorted(g.terms, key=grlex_key, reverse=True)
    return [(grlex_key(e), g.terms[e].constant_value()) for e in ordered]


def principal_from_two(p: WeylElement, q: WeylElement, k, side: str = LEFT
                       ) -> Tuple[WeylElement, CertifiedGenerators]:
    """A single generator t of the one-sided ideal of A_n^k generated by p and q."""
    _check_side(side)
    n = _same_n(p, q)
    k = TwistParameter.of(k, n)
    parts = [constant_generators(p, k, side), constant_generators(q, k, side)]

    # constant generators with their certificates over [p, q]
    pool: List[Tuple[WeylElement, Certificate]] = []
    for origin, part in enumerate(parts):
        for g, cert in zip(part.new_generators, part.new_in_old):
            if all(g != h for h, _ in pool):
                pool.append((g, reindex(cert, [origin])))
    pool.sort(key=lambda item: generator_sort_key(item[0]))
    combined = [g for g, _ in pool]

    t, _chain, principal = principal_from_constant(combined, k, side)
    old = IdealPresentation(side, n, k, (p, q))
    t_over_pq = compose_presentation_change([c for _, c in pool], principal.new_in_old[0])
    back = []
    for part in parts:
        positions = [combined.index(g) for g in part.new_generators]
        over_combined = reindex(part.old_in_new[0], positions)
        back.append(compose_presentation_change(principal.old_in_new, over_combined))
    return t, CertifiedGenerators(old, principal.new, (t_over_pq,), tuple(back))


def hom_generators_from_assoc(gens: Sequence[WeylElement], k) -> List[WeylElement]:
    """Generators of an A_n-ideal, turned into generators of the same A_n^k-ideal."""
    gens = list(gens)
    if not gens:
        return []
    k = TwistParameter.of(k, _same_n(*gens))
    if not k.all_nonzero:
        raise KComponentZero(f"hom_generators_from_assoc needs every k_i != 0, k = ({k})")
    return [alpha_pow(g, k, -1) for g in gens]


def check_generator_transform(multipliers: Sequence[WeylElement], gens: Sequence[WeylElement],
                              k, side: str = LEFT) -> IdentityReport:
    """sum a_i p_i == sum alpha^-1(a_i) * alpha^-1(p_i) (mirrored for right ideals)."""
    _check_side(side)
    if len(multipliers) != len(gens) or not gens:
        raise ValueError("need equally many, and at least one, multipliers and generators")
    n = _same_n(*multipliers, *gens)
    k = TwistParameter.of(k, n)
    inv_gens = hom_generators_from_assoc(gens, k)
    lhs_terms, rhs_terms = [], []
    for a, g, ig in zip(multipliers, gens, inv_gens):
        ia = alpha_pow(a, k, -1)
        if side == LEFT:
            lhs_terms.append((1, mul_assoc(a, g)))
            rhs_terms.append((1, yau_mul(ia, ig, k)))
        else:
            lhs_terms.append((1, mul_assoc(g, a)))
            rhs_terms.append((1, yau_mul(ig, ia, k)))
    return IdentityReport.compare(linear_combine(lhs_terms), linear_combine(rhs_terms))


def alpha_invariance_witness(p: WeylElement, a: MultiIndex, k) -> IdentityReport:
    """alpha_k(p x^a) == alpha_k(p) x^a."""
    xa = x_power(tuple(a))
    _same_n(p, xa)
    lhs = alpha_pow(mul_assoc(p, xa), k)
    rhs = mul_assoc(alpha_pow(p, k), xa)
    return IdentityReport.compare(lhs, rhs)
