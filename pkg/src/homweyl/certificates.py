"""Membership certificates for one-sided ideals of A_n^k.

A certificate is an expression tree over the generators of an
:class:`IdealPresentation`.  Every node kind is an ideal-closure operation,
so whatever a certificate evaluates to lies in the ideal:

* ``Gen(i)``        the i-th generator
* ``Add(l, r)``     l + r
* ``Scale(c, t)``   c t for a rational c
* ``StarGen(m, t)`` m * t for left ideals, t * m for right ideals (twisted product)
* ``Alpha(t)``      alpha_k(t), which equals 1 * t
* ``AlphaInv(t)``   alpha_k^-1(t); only admitted when every k_i is non-zero,
                    where alpha_k(I) = I holds for every one-sided ideal I

Trees may share subtrees; evaluation and substitution respect the sharing.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from homweyl.errors import CertificateError, DimensionError, UnsoundNodeError
from homweyl.notation import parse, print_canonical
from homweyl.weyl import TwistParameter, WeylElement, alpha_pow, as_rational, yau_mul

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Add:
    left: "Certificate"
    right: "Certificate"


@dataclass(frozen=True)
class Scale:
    c: Fraction
    child: "Certificate"


@dataclass(frozen=True)
class StarGen:
    m: WeylElement
    child: "Certificate"


@dataclass(frozen=True)
class Alpha:
    child: "Certificate"


@dataclass(frozen=True)
class AlphaInv:
    child: "Certificate"


Certificate = Union[Gen, Add, Scale, StarGen, Alpha, AlphaInv]


def add_all(certs: Sequence[Certificate]) -> Certificate:
    """Sum of several certificates as a balanced tree of Add nodes."""
    certs = list(certs)
    if not certs:
        raise CertificateError("cannot add an empty list of certificates")
    while len(certs) > 1:
        paired = [Add(certs[i], certs[i + 1]) for i in range(0, len(certs) - 1, 2)]
        if len(certs) % 2:
            paired.append(certs[-1])
        certs = paired
    return certs[0]


def scale(c, child: Certificate) -> Certificate:
    c = as_rational(c)
    return child if c == 1 else Scale(c, child)


def difference(child: Certificate) -> Certificate:
    """alpha_k(t) - t."""
    return Add(Alpha(child), Scale(Fraction(-1), child))


@dataclass(frozen=True)
class IdealPresentation:
    """A one-sided ideal of A_n^k given by an ordered list of generators."""

    side: str
    n: int
    k: TwistParameter
    generators: Tuple[WeylElement, ...]

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', not {self.side!r}")
        object.__setattr__(self, "k", TwistParameter.of(self.k, self.n))
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.n != self.n:
                raise DimensionError(f"generator in A_{g.n} for a presentation over A_{self.n}")
            if g.is_zero():
                raise CertificateError("presentations may not contain the zero generator")

    def with_generators(self, generators: Iterable[WeylElement]) -> "IdealPresentation":
        return IdealPresentation(self.side, self.n, self.k, tuple(generators))


def evaluate_certificate(cert: Certificate, pres: IdealPresentation) -> WeylElement:
    memo: Dict[int, WeylElement] = {}

    def ev(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Gen):
            if not 0 <= node.index < len(pres.generators):
                raise CertificateError(
                    f"Gen({node.index}) outside a presentation of {len(pres.generators)} generators")
            value = pres.generators[node.index]
        elif isinstance(node, Add):
            value = ev(node.left) + ev(node.right)
        elif isinstance(node, Scale):
            value = ev(node.child).scale(node.c)
        elif isinstance(node, StarGen):
            if node.m.n != pres.n:
                raise DimensionError(f"multiplier in A_{node.m.n} for a presentation over A_{pres.n}")
            child = ev(node.child)
            value = yau_mul(node.m, child, pres.k) if pres.side == LEFT else yau_mul(child, node.m, pres.k)
        elif isinstance(node, Alpha):
            value = alpha_pow(ev(node.child), pres.k, 1)
        elif isinstance(node, AlphaInv):
            if not pres.k.all_nonzero:
                raise UnsoundNodeError(f"AlphaInv needs every k_i non-zero, k = ({pres.k})")
            value = alpha_pow(ev(node.child), pres.k, -1)
        else:
            raise CertificateError(f"unknown certificate node {node!r}")
        memo[key] = value
        return value

    return ev(cert)


def verify_membership(cert: Certificate, pres: IdealPresentation, target: WeylElement) -> bool:
    return evaluate_certificate(cert, pres) == target


def compose_presentation_change(certs_new_in_old: Sequence[Certificate],
                                cert_over_new: Certificate) -> Certificate:
    """Rewrite a certificate over new generators into one over the old generators.

    ``certs_new_in_old[i]`` expresses new generator i over the old
    presentation; every ``Gen(i)`` leaf of ``cert_over_new`` is replaced by it.
    """
    memo: Dict[int, Certificate] = {}

    def sub(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Gen):
            if not 0 <= node.index < len(certs_new_in_old):
                raise CertificateError(
                    f"Gen({node.index}) has no substitute among {len(certs_new_in_old)} certificates")
            out = certs_new_in_old[node.index]
        elif isinstance(node, Add):
            out = Add(sub(node.left), sub(node.right))
        elif isinstance(node, Scale):
            out = Scale(node.c, sub(node.child))
        elif isinstance(node, StarGen):
            out = StarGen(node.m, sub(node.child))
        elif isinstance(node, Alpha):
            out = Alpha(sub(node.child))
        elif isinstance(node, AlphaInv):
            out = AlphaInv(sub(node.child))
        else:
            raise CertificateError(f"unknown certificate node {node!r}")
        memo[key] = out
        return out

    return sub(cert_over_new)


def reindex(cert: Certificate, mapping: Sequence[int]) -> Certificate:
    """Rename generator i to ``mapping[i]``."""
    return compose_presentation_change([Gen(j) for j in mapping], cert)


def node_count(cert: Certificate) -> int:
    """Number of distinct nodes (shared subtrees counted once)."""
    seen = set()
    stack = [cert]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Add):
            stack += [node.left, node.right]
        elif not isinstance(node, Gen):
            stack.append(node.child)
    return len(seen)


# -- serialization -----------------------------------------------------------

def to_json_obj(cert: Certificate):
    if isinstance(cert, Gen):
        return {"gen": cert.index}
    if isinstance(cert, Add):
        return {"add": [to_json_obj(cert.left), to_json_obj(cert.right)]}
    if isinstance(cert, Scale):
        return {"scale": [str(cert.c), to_json_obj(cert.child)]}
    if isinstance(cert, StarGen):
        return {"star": [print_canonical(cert.m), to_json_obj(cert.child)]}
    if isinstance(cert, Alpha):
        return {"alpha": to_json_obj(cert.child)}
    if isinstance(cert, AlphaInv):
        return {"alphainv": to_json_obj(cert.child)}
    raise CertificateError(f"unknown certificate node {cert!r}")


def from_json_obj(obj, n: int) -> Certificate:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise CertificateError(f"certificate node must be a one-key object, got {obj!r}")
    (tag, payload), = obj.items()
    if tag == "gen":
        if not isinstance(payload, int) or isinstance(payload, bool) or payload < 0:
            raise CertificateError(f"bad generator index {payload!r}")
        return Gen(payload)
    if tag in ("alpha", "alphainv"):
        child = from_json_obj(payload, n)
        return Alpha(child) if tag == "alpha" else AlphaInv(child)
    if not isinstance(payload, list) or len(payload) != 2:
        raise CertificateError(f"{tag!r} expects a two-element list")
    first, second = payload
    if tag == "add":
        return Add(from_json_obj(first, n), from_json_obj(second, n))
    if tag == "scale":
        return Scale(Fraction(first), from_json_obj(second, n))
    if tag == "star":
        return StarGen(parse(first, n), from_json_obj(second, n))
    raise CertificateError(f"unknown certificate tag {tag!r}")


def dumps(cert: Certificate) -> str:
    """Canonical compact JSON text of a certificate."""
    return json.dumps(to_json_obj(cert), separators=(",", ":"))


def loads(text: str, n: int) -> Certificate:
    return from_json_obj(json.loads(text), n)


def presentation_to_json_obj(pres: IdealPresentation):
    return {
        "side": pres.side,
        "n": pres.n,
        "k": [str(c) for c in pres.k],
        "generators": [print_canonical(g) for g in pres.generators],
    }


def presentation_from_json_obj(obj) -> IdealPresentation:
    n = int(obj["n"])
    return IdealPresentation(
        obj["side"], n, TwistParameter(obj["k"]), tuple(parse(g, n) for g in obj["generators"]))


def certificates_to_json_obj(certs: Iterable[Certificate]) -> List:
    return [to_json_obj(c) for c in certs]
