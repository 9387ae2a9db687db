"""Checks of the defining identities of the Yau twist A_n^k."""

from dataclasses import dataclass

from homweyl.weyl import TwistParameter, WeylElement, _same_n, alpha_pow, yau_mul


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of an identity and their difference."""

    holds: bool
    lhs: WeylElement
    rhs: WeylElement
    discrepancy: WeylElement

    @classmethod
    def compare(cls, lhs: WeylElement, rhs: WeylElement) -> "IdentityReport":
        diff = lhs - rhs
        return cls(diff.is_zero(), lhs, rhs, diff)

    def __bool__(self):
        return self.holds


def check_hom_associativity(a: WeylElement, b: WeylElement, c: WeylElement, k) -> IdentityReport:
    """alpha_k(a) * (b * c) == (a * b) * alpha_k(c) for the twisted product."""
    n = _same_n(a, b, c)
    k = TwistParameter.of(k, n)
    lhs = yau_mul(alpha_pow(a, k), yau_mul(b, c, k), k)
    rhs = yau_mul(yau_mul(a, b, k), alpha_pow(c, k), k)
    return IdentityReport.compare(lhs, rhs)


def check_weak_unit(a: WeylElement, k) -> IdentityReport:
    """1 * a == a * 1 == alpha_k(a).

    ``rhs`` is alpha_k(a).  ``lhs`` is 1 * a unless that already matches,
    in which case it is a * 1, so a failure on either side shows up in the
    discrepancy.
    """
    k = TwistParameter.of(k, a.n)
    one = WeylElement.one(a.n)
    left = yau_mul(one, a, k)
    right = yau_mul(a, one, k)
    target = alpha_pow(a, k)
    if left != target:
        return IdentityReport.compare(left, target)
    return IdentityReport.compare(right, target)


def check_morphism_of_twist(a: WeylElement, b: WeylElement, k) -> IdentityReport:
    """alpha_k(a * b) == alpha_k(a) * alpha_k(b)."""
    n = _same_n(a, b)
    k = TwistParameter.of(k, n)
    lhs = alpha_pow(yau_mul(a, b, k), k)
    rhs = yau_mul(alpha_pow(a, k), alpha_pow(b, k), k)
    return IdentityReport.compare(lhs, rhs)
