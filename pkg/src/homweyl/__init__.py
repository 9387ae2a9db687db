"""Exact arithmetic in the Weyl algebras A_n and their Yau twists A_n^k,
with certified constructions of principal generators for one-sided ideals."""

from homweyl.errors import (
    AlgorithmError,
    AllKZero,
    CertificateError,
    DimensionError,
    EmptyInput,
    KComponentZero,
    NonConstantGenerator,
    ParseError,
    Stalled,
    UnsoundNodeError,
    WeylError,
    ZeroInput,
)
from homweyl.weyl import (
    Degrees,
    TwistParameter,
    WeylElement,
    YPoly,
    alpha_pow,
    degrees,
    grlex_cmp,
    linear_combine,
    mul_assoc,
    support,
    yau_mul,
)
from homweyl.oracle import mul_rewrite_oracle
from homweyl.notation import parse, print_canonical
from homweyl.hom import (
    IdentityReport,
    check_hom_associativity,
    check_morphism_of_twist,
    check_weak_unit,
)
from homweyl.certificates import (
    Add,
    Alpha,
    AlphaInv,
    Gen,
    IdealPresentation,
    Scale,
    StarGen,
    compose_presentation_change,
    evaluate_certificate,
    verify_membership,
)
from homweyl.ideals import (
    CertifiedGenerators,
    DifferenceChain,
    alpha_invariance_witness,
    check_generator_transform,
    constant_generators,
    flatten_leading,
    hom_generators_from_assoc,
    principal_from_constant,
    principal_from_two,
)

__version__ = "0.1.0"
