"""Cyclotomic generators of the ideals ``I_l`` and of the link-class ideals
in which colored Jones polynomials of ribbon, boundary and Brunnian links
take values, with Bezout certificates for principality."""

from .cyclotomic import (
    CoprimalityWitness,
    CycFactorization,
    NotCoprime,
    bezout_cyclotomic,
    bezout_products,
    cyc_multiplicity,
    cyclotomic,
    factor_cyclotomic,
    is_coprime_cyclotomic,
    mobius,
)
from .habiro_ideals import (
    BezoutCertificate,
    InternalInconsistency,
    f_gen,
    g_exponents,
    gcd_oracle_lk,
    gcd_oracle_rational,
    h_gen,
    lemma_gl_witness,
    principality_certificate,
    t_exponent,
    tilde_g,
    verify_certificate,
)
from .link_ideals import (
    ColorSpec,
    InvalidSpec,
    LinkClass,
    base_exponents,
    membership,
    milnor_fixture,
    z_a_generator,
    z_br_generator,
    z_intersection_generator,
    z_rb_generator,
)
from .poly_core import (
    LaurentPoly,
    NotDivisible,
    PolySyntaxError,
    divide_exact,
    normalize_unit,
    parse,
    to_string,
)
from .qcalc import falling_exponents, q_factorial, q_falling, q_int

__all__ = [
    "BezoutCertificate",
    "ColorSpec",
    "CoprimalityWitness",
    "CycFactorization",
    "InternalInconsistency",
    "InvalidSpec",
    "LaurentPoly",
    "LinkClass",
    "NotCoprime",
    "NotDivisible",
    "PolySyntaxError",
    "base_exponents",
    "bezout_cyclotomic",
    "bezout_products",
    "cyc_multiplicity",
    "cyclotomic",
    "divide_exact",
    "f_gen",
    "factor_cyclotomic",
    "falling_exponents",
    "g_exponents",
    "gcd_oracle_lk",
    "gcd_oracle_rational",
    "h_gen",
    "is_coprime_cyclotomic",
    "lemma_gl_witness",
    "membership",
    "milnor_fixture",
    "mobius",
    "normalize_unit",
    "parse",
    "principality_certificate",
    "q_factorial",
    "q_falling",
    "q_int",
    "t_exponent",
    "tilde_g",
    "to_string",
    "verify_certificate",
    "z_a_generator",
    "z_br_generator",
    "z_intersection_generator",
    "z_rb_generator",
]

__version__ = "0.1.0"
