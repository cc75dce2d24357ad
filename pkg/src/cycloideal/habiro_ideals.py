"""The ideals ``I_l = (f_{l,0}, ..., f_{l,l})`` and their principal generators.

``f_{l,k} = {l-k}_q! {k}_q!``.  The intermediate ideals
``I_{l,k} = (h_{l,k,0}, ..., h_{l,k,k})`` with ``h_{l,k,i} = {l-i}_{q,k-i} {i}_q!``
satisfy ``(f_{l,0}, ..., f_{l,k}) = {l-k}_q! I_{l,k}`` and ``I_{l,l} = I_l``.
Their GCD ``g_{l,k}`` has the closed form

    d_m(g_{l,k}) = floor((l+1)/m) - 1 - floor((l-k)/m)   for 1 <= m <= k,

and each ``I_{l,k}`` is principal.  :func:`principality_certificate` builds
explicit coefficients ``c_k`` with ``sum c_k f_{l,k} = g_l`` by induction on
``k``, one coprimality witness per step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._rational import primitive_integer, rational_gcd, to_fractions
from .cyclotomic import (
    CoprimalityWitness,
    NotCoprime,
    bezout_products,
    divisors,
    factor_cyclotomic,
    mobius,
)
from .poly_core import ONE, ZERO, LaurentPoly, divide_exact, parse, to_string, try_divide
from .qcalc import (
    ExponentVector,
    RangeError,
    expand,
    q_factorial,
    q_falling,
    q_int,
)

__all__ = [
    "IdealLevel",
    "BezoutCertificate",
    "InternalInconsistency",
    "f_gen",
    "h_gen",
    "t_exponent",
    "t_exponents",
    "g_exponents",
    "g_poly",
    "gcd_oracle_lk",
    "gcd_oracle_rational",
    "tilde_g",
    "tilde_g_exponents",
    "lemma_gl_witness",
    "principality_certificate",
    "verify_certificate",
]


class InternalInconsistency(RuntimeError):
    """A proof step failed to check; indicates a bug, never bad input."""


@dataclass(frozen=True)
class IdealLevel:
    l: int
    k: int

    def __post_init__(self):
        _check_level(self.l, self.k)


def _check_level(l: int, k: int) -> None:
    if not 0 <= k <= l:
        raise RangeError(f"need 0 <= k <= l, got l={l}, k={k}")


def f_gen(l: int, k: int) -> LaurentPoly:
    """``{l-k}_q! {k}_q!``."""
    _check_level(l, k)
    return q_factorial(l - k) * q_factorial(k)


def h_gen(l: int, k: int, i: int) -> LaurentPoly:
    """``{l-i}_{q,k-i} {i}_q!``, i.e. ``f_{l,i} / {l-k}_q!``."""
    _check_level(l, k)
    if not 0 <= i <= k:
        raise RangeError(f"need 0 <= i <= k, got k={k}, i={i}")
    return q_falling(l - i, k - i) * q_factorial(i)


def t_exponent(l: int, m: int) -> int:
    if l < 0 or m < 1:
        raise RangeError(f"need l >= 0 and m >= 1, got l={l}, m={m}")
    return (l + 1) // m - 1 if m <= l else 0


def t_exponents(l: int) -> ExponentVector:
    """``{m: t_{l,m}}`` with zeros dropped; the exponent vector of ``g_l``."""
    return {m: e for m in range(1, l + 1) if (e := t_exponent(l, m))}


def g_exponents(l: int, k: int) -> ExponentVector:
    """Closed-form exponent vector of ``g_{l,k} = GCD(h_{l,k,0..k})``."""
    _check_level(l, k)
    out = {}
    for m in range(1, k + 1):
        e = (l + 1) // m - 1 - (l - k) // m
        if e:
            out[m] = e
    return out


def g_poly(l: int, k: int | None = None) -> LaurentPoly:
    return expand(g_exponents(l, l if k is None else k))


def gcd_oracle_lk(l: int, k: int) -> ExponentVector:
    """GCD exponents of the ``h_{l,k,i}`` from their factorizations (no formula)."""
    _check_level(l, k)
    profiles = []
    for i in range(k + 1):
        fac = factor_cyclotomic(h_gen(l, k, i))
        if not fac.is_cyclotomic_product():
            raise InternalInconsistency(f"h_({l},{k},{i}) is not a product of cyclotomics")
        profiles.append(fac.exponents)
    common = set(profiles[0])
    for p in profiles[1:]:
        common &= set(p)
    return {m: min(p[m] for p in profiles) for m in sorted(common)}


def gcd_oracle_rational(l: int) -> LaurentPoly:
    """GCD over Q of the expanded ``f_{l,0..l}``, in primitive positive form."""
    if l < 0:
        raise RangeError(f"need l >= 0, got {l}")
    g = to_fractions(f_gen(l, 0))
    for k in range(1, l + 1):
        g = rational_gcd(g, to_fractions(f_gen(l, k)))
    return primitive_integer(g)


def tilde_g_exponents(l: int, k: int) -> ExponentVector:
    """``Phi_m`` for divisors m of ``l-k+1`` with ``m <= k``, each once."""
    if not 1 <= k <= l:
        raise RangeError(f"need 1 <= k <= l, got l={l}, k={k}")
    return {m: 1 for m in divisors(l - k + 1) if m <= k}


def tilde_g(l: int, k: int) -> LaurentPoly:
    """``g_{l,k} / g_{l,k-1}``."""
    return expand(tilde_g_exponents(l, k))


def _exponent_gcd(a: dict[int, int], b: dict[int, int]) -> ExponentVector:
    return {m: min(a[m], b[m]) for m in sorted(set(a) & set(b))}


def _exponent_quotient(a: dict[int, int], b: dict[int, int]) -> ExponentVector:
    out = {}
    for m in sorted(set(a) | set(b)):
        e = a.get(m, 0) - b.get(m, 0)
        if e < 0:
            raise InternalInconsistency(f"Phi_{m} exponent would go negative")
        if e:
            out[m] = e
    return out


def lemma_gl_witness(l: int, k: int) -> CoprimalityWitness:
    """Witness ``u (A/G) + v (B/G) = 1`` for one induction step.

    ``A = {l-k+1}_q``, ``B = {k}_q {k-1}_q! / g_{l,k-1}`` and ``G = tilde_g(l,k)``.
    Checks on the way that ``GCD(A, B) = G`` and the multiplicities of
    ``Phi_m`` in ``{k}_q`` and ``{k-1}_q!/g_{l,k-1}`` for ``m | l-k+1, m <= k``.
    """
    if not 1 <= k <= l:
        raise RangeError(f"need 1 <= k <= l, got l={l}, k={k}")
    A = q_int(l - k + 1)
    rest = try_divide(q_factorial(k - 1), g_poly(l, k - 1))
    if rest is None:
        raise InternalInconsistency(f"g_({l},{k - 1}) does not divide {{{k - 1}}}_q!")
    B = q_int(k) * rest

    fac_a, fac_b, fac_rest = factor_cyclotomic(A), factor_cyclotomic(B), factor_cyclotomic(rest)
    for name, fac in (("A", fac_a), ("B", fac_b), ("rest", fac_rest)):
        if not fac.is_cyclotomic_product() or fac.sign != 1 or fac.q_power != 0:
            raise InternalInconsistency(f"{name} is not a monic product of cyclotomics")

    G = tilde_g_exponents(l, k)
    if _exponent_gcd(fac_a.exponents, fac_b.exponents) != G:
        raise InternalInconsistency(f"GCD(A, B) != tilde_g at l={l}, k={k}")

    for m in divisors(l - k + 1):
        if m > k:
            continue
        divides = k % m == 0
        if fac_b.multiplicity(m) - fac_rest.multiplicity(m) != (1 if divides else 0):
            raise InternalInconsistency(f"d_{m}({{{k}}}_q) unexpected at l={l}, k={k}")
        if fac_rest.multiplicity(m) != (0 if divides else 1):
            raise InternalInconsistency(f"d_{m}({{{k - 1}}}_q!/g) unexpected at l={l}, k={k}")

    a_side = _exponent_quotient(fac_a.exponents, G)
    b_side = _exponent_quotient(fac_b.exponents, G)
    try:
        witness = bezout_products(a_side, b_side)
    except NotCoprime as exc:
        raise InternalInconsistency(f"A/G and B/G not coprime at l={l}, k={k}") from exc
    g_poly_ = expand(G)
    if witness.a != divide_exact(A, g_poly_) or witness.b != divide_exact(B, g_poly_):
        raise InternalInconsistency("witness built for the wrong pair")
    return witness


@dataclass(frozen=True)
class BezoutCertificate:
    """Coefficients with ``sum(c_k * f_{l,k}) == claimed_generator``."""

    l: int
    coefficients: tuple[LaurentPoly, ...]
    claimed_generator: LaurentPoly

    def to_json(self, **kwargs) -> str:
        doc = {
            "l": self.l,
            "generator": to_string(self.claimed_generator),
            "coefficients": [to_string(c) for c in self.coefficients],
        }
        return json.dumps(doc, **kwargs)

    @classmethod
    def from_json(cls, text: str) -> BezoutCertificate:
        doc = json.loads(text)
        return cls(
            l=int(doc["l"]),
            coefficients=tuple(parse(c) for c in doc["coefficients"]),
            claimed_generator=parse(doc["generator"]),
        )


def principality_certificate(l: int) -> BezoutCertificate:
    """Explicit combination of ``f_{l,0..l}`` equal to ``g_l``.

    Keeps coefficients ``c`` with ``sum_i c_i h_{l,k,i} = g_{l,k}``.  Since
    ``h_{l,k,i} = {l-k+1}_q h_{l,k-1,i}`` for ``i < k`` and ``h_{l,k,k} = {k}_q!``,
    a witness ``u (A/G) + v (B/G) = 1`` lifts the step: ``c_i <- u c_i``, append ``v``.
    """
    if l < 0:
        raise RangeError(f"need l >= 0, got {l}")
    coeffs: list[LaurentPoly] = [ONE]
    for k in range(1, l + 1):
        w = lemma_gl_witness(l, k)
        coeffs = [w.u * c for c in coeffs]
        coeffs.append(w.v)
    cert = BezoutCertificate(l, tuple(coeffs), g_poly(l))
    if not verify_certificate(cert):
        raise InternalInconsistency(f"certificate for l={l} does not verify")
    return cert


def _generator_by_mobius(l: int) -> LaurentPoly:
    # prod_m Phi_m^t = prod_d (q^d - 1)^(sum_{d|m} mu(m/d) t_m), built without Phi_m
    powers: dict[int, int] = {}
    for m in range(1, l + 1):
        t = t_exponent(l, m)
        if not t:
            continue
        for d in divisors(m):
            mu = mobius(m // d)
            if mu:
                powers[d] = powers.get(d, 0) + mu * t
    num, den = ONE, ONE
    for d, e in powers.items():
        if e > 0:
            num = num * q_int(d) ** e
        elif e < 0:
            den = den * q_int(d) ** (-e)
    return divide_exact(num, den)


def verify_certificate(cert: BezoutCertificate) -> bool:
    """Independent check: recompute every ``f_{l,k}`` and the expected generator."""
    l = cert.l
    if l < 0 or len(cert.coefficients) != l + 1:
        return False
    # {n}_q! for n <= l, from scratch
    facts = [ONE]
    for n in range(1, l + 1):
        facts.append(facts[-1] * (LaurentPoly({n: 1}) - ONE))
    total = ZERO
    for k, c in enumerate(cert.coefficients):
        total = total + c * (facts[l - k] * facts[k])
    expected = _generator_by_mobius(l)
    return total == expected and cert.claimed_generator == expected


def coefficient_stats(cert: BezoutCertificate) -> dict[str, int]:
    """Sizes of a certificate, for reporting."""
    nonzero = [c for c in cert.coefficients if not c.is_zero()]
    return {
        "max_degree": max((c.degree() for c in nonzero), default=0),
        "max_bits": max((abs(x).bit_length() for c in nonzero for x in c.terms.values()), default=0),
    }
