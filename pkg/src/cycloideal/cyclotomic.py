"""Cyclotomic polynomials, multiplicities and coprimality witnesses."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from sympy import factorint, isprime

from ._rational import rational_xgcd, to_fractions
from .poly_core import (
    ONE,
    ZERO,
    LaurentPoly,
    ZeroInput,
    normalize_unit,
    try_divide,
)

__all__ = [
    "CycFactorization",
    "CoprimalityWitness",
    "NotCoprime",
    "divisors",
    "mobius",
    "totient",
    "cyclotomic",
    "cyclotomic_product",
    "cyc_multiplicity",
    "factor_cyclotomic",
    "is_coprime_cyclotomic",
    "bezout_cyclotomic",
    "bezout_products",
    "lift_witness",
    "combine_witnesses",
]


class NotCoprime(ArithmeticError):
    pass


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    result = 1
    for e in factorint(n).values():
        if e > 1:
            return 0
        result = -result
    return result


def totient(n: int) -> int:
    result = n
    for p in factorint(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> LaurentPoly:
    """The m-th cyclotomic polynomial, by exact division of ``q^m - 1``.

    >>> str(cyclotomic(6))
    '1 - q + q^2'
    """
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    p = LaurentPoly({m: 1, 0: -1})
    for d in divisors(m)[:-1]:
        p = try_divide(p, cyclotomic(d))
    return p


def cyclotomic_product(exponents: Mapping[int, int]) -> LaurentPoly:
    """Expand ``prod Phi_m^e``; negative exponents are rejected."""
    result = ONE
    for m in sorted(exponents):
        e = exponents[m]
        if e < 0:
            raise ValueError(f"negative exponent {e} for Phi_{m}")
        if e:
            result = result * cyclotomic(m) ** e
    return result


def cyc_multiplicity(a: LaurentPoly, m: int) -> int:
    """Largest ``i`` with ``Phi_m^i`` dividing ``a``."""
    if a.is_zero():
        raise ZeroInput("multiplicity in the zero polynomial")
    phi = cyclotomic(m)
    count = 0
    while True:
        quotient = try_divide(a, phi)
        if quotient is None:
            return count
        a = quotient
        count += 1


# -- factorization ---------------------------------------------------------

_sieve_lock = threading.Lock()
_phi_table: list[int] = [0, 1]


def _totients_upto(n: int) -> list[int]:
    global _phi_table
    with _sieve_lock:
        if len(_phi_table) <= n:
            size = max(n + 1, 2 * len(_phi_table))
            phi = list(range(size))
            for p in range(2, size):
                if phi[p] == p:
                    for k in range(p, size, p):
                        phi[k] -= phi[k] // p
            _phi_table = phi
        return _phi_table


@lru_cache(maxsize=None)
def _max_index_with_totient_at_most(d: int) -> int:
    """Largest m with totient(m) <= d (so Phi_m can divide a degree-d polynomial)."""
    if d < 1:
        return 0
    # totient(m) >= sqrt(m/2) gives the hard cap m <= 2 d^2
    cap = 2 * d * d + 2
    # tighter cap from totient(m) > m / (e^gamma loglog m + 3/loglog m), m >= 3
    n = 16
    while n < cap:
        ll = math.log(math.log(n))
        if n / (1.7811 * ll + 3 / ll) > 4 * d + 16:
            cap = n
            break
        n *= 2
    phi = _totients_upto(cap)
    return max(m for m in range(1, cap + 1) if phi[m] <= d)


@lru_cache(maxsize=None)
def _root_of_unity_mod_prime(m: int) -> tuple[int, int]:
    """A prime ``p = k m + 1`` and an element of exact order m modulo p."""
    k = (1 << 31) // m + 1
    while not isprime(k * m + 1):
        k += 1
    p = k * m + 1
    prime_factors = list(factorint(m))
    for a in range(2, p):
        z = pow(a, (p - 1) // m, p)
        if all(pow(z, m // r, p) != 1 for r in prime_factors):
            return p, z
    raise AssertionError("no primitive root found")  # unreachable for prime p


def _vanishes_at_root(a: LaurentPoly, m: int) -> bool:
    """Necessary condition for ``Phi_m | a``: a(zeta) == 0 in F_p."""
    if m == 1:
        return sum(a.terms.values()) == 0
    if m == 2:
        return sum(c if e % 2 == 0 else -c for e, c in a.terms.items()) == 0
    p, z = _root_of_unity_mod_prime(m)
    folded = [0] * m
    for e, c in a.terms.items():
        folded[e % m] += c
    acc = 0
    for c in reversed(folded):
        acc = (acc * z + c) % p
    return acc == 0


@dataclass(frozen=True)
class CycFactorization:
    """``sign * q^q_power * prod Phi_m^exponents[m] * residual``."""

    sign: int
    q_power: int
    exponents: Mapping[int, int]
    residual: LaurentPoly = field(default=ONE)

    def multiplicity(self, m: int) -> int:
        return self.exponents.get(m, 0)

    def is_cyclotomic_product(self) -> bool:
        return self.residual.is_one()

    def reconstruct(self) -> LaurentPoly:
        unit = LaurentPoly.monomial(self.q_power, self.sign)
        return unit * cyclotomic_product(self.exponents) * self.residual


def _euler_exponents(p: LaurentPoly) -> dict[int, int] | None:
    """Exponents of ``p`` if it is a product of cyclotomics, else ``None``.

    Writes ``p = ±prod_d (1 - q^d)^c_d`` as a power series truncated past
    ``deg p`` (enough whenever every factor index is at most ``deg p``),
    converts to ``Phi_m`` exponents ``e_m = sum_{m | d} c_d`` and confirms by
    exact expansion.  ``p`` must have lowest exponent 0.
    """
    _, series = p.to_dense()
    if series[0] not in (1, -1):
        return None
    if series[0] == -1:
        series = [-c for c in series]
    deg = len(series) - 1
    prec = deg + 1
    counts: dict[int, int] = {}
    weight = 0
    for d in range(1, prec):
        c = -series[d]
        if c:
            counts[d] = c
            weight += d * c
            if c > 0:
                for _ in range(c):  # divide by (1 - q^d)
                    for j in range(d, prec):
                        series[j] += series[j - d]
            else:
                for _ in range(-c):  # multiply by (1 - q^d)
                    for j in range(prec - 1, d - 1, -1):
                        series[j] -= series[j - d]
        if weight == deg and not any(series[d + 1:]):
            break
    else:
        return None
    exponents: dict[int, int] = {}
    for d, c in counts.items():
        for m in divisors(d):
            exponents[m] = exponents.get(m, 0) + c
    if any(e < 0 for e in exponents.values()):
        return None
    # exact check: p * prod_{c<0} (1-q^d)^-c == ±prod_{c>0} (1-q^d)^c
    _, lhs = p.to_dense()
    rhs = [1 if lhs[0] == 1 else -1]
    for d, c in counts.items():
        for _ in range(abs(c)):
            if c > 0:
                rhs = _times_one_minus(rhs, d)
            else:
                lhs = _times_one_minus(lhs, d)
    if lhs != rhs:
        return None
    return {m: e for m, e in sorted(exponents.items()) if e}


def _times_one_minus(seq: list[int], d: int) -> list[int]:
    out = seq + [0] * d
    for j in range(len(out) - 1, d - 1, -1):
        out[j] -= out[j - d]
    return out


def factor_cyclotomic(a: LaurentPoly) -> CycFactorization:
    """Strip the unit, then divide out ``Phi_1, Phi_2, ...`` while possible.

    Candidates ``m`` run up to the largest index whose cyclotomic degree still
    fits into what remains; anything left over is the residual.

    >>> f = factor_cyclotomic(LaurentPoly({5: 1, 0: -1}))
    >>> dict(f.exponents), str(f.residual)
    ({1: 1, 5: 1}, '1')
    """
    if a.is_zero():
        raise ZeroInput("factorization of the zero polynomial")
    normal = normalize_unit(a)
    rest = normal.primitive_part
    if normal.content == 1:
        fast = _euler_exponents(rest)
        if fast is not None:
            return CycFactorization(normal.sign, normal.q_power, fast, ONE)
    exponents: dict[int, int] = {}
    m = 0
    while True:
        deg = rest.degree()
        if deg == 0:
            break
        m += 1
        if m > _max_index_with_totient_at_most(deg):
            break
        if _totients_upto(m)[m] > deg or not _vanishes_at_root(rest, m):
            continue
        phi = cyclotomic(m)
        count = 0
        while True:
            quotient = try_divide(rest, phi)
            if quotient is None:
                break
            rest = quotient
            count += 1
        if count:
            exponents[m] = count
    residual = rest * normal.content
    return CycFactorization(normal.sign, normal.q_power, exponents, residual)


# -- coprimality witnesses ---------------------------------------------------


@dataclass(frozen=True)
class CoprimalityWitness:
    """``u * a + v * b == 1``, checked on construction."""

    u: LaurentPoly
    v: LaurentPoly
    a: LaurentPoly
    b: LaurentPoly

    def __post_init__(self):
        if not self.holds():
            raise ArithmeticError("coprimality witness does not satisfy u*a + v*b = 1")

    def holds(self) -> bool:
        return (self.u * self.a + self.v * self.b).is_one()

    def swapped(self) -> CoprimalityWitness:
        return CoprimalityWitness(self.v, self.u, self.b, self.a)


def is_coprime_cyclotomic(a: int, b: int) -> bool:
    """True iff ``a/b`` in lowest terms is not ``p^i`` for a prime p, i in Z.

    Equal indices give ratio ``1 = p^0``, so they are never coprime.
    """
    if a < 1 or b < 1:
        raise ValueError("cyclotomic indices must be >= 1")
    g = math.gcd(a, b)
    num, den = a // g, b // g
    if num != 1 and den != 1:
        return True
    r = num * den
    return r != 1 and len(factorint(r)) > 1


def _integral(coeffs: list[Fraction]) -> LaurentPoly | None:
    if any(c.denominator != 1 for c in coeffs):
        return None
    return LaurentPoly.from_dense(0, [int(c) for c in coeffs])


def _reduce_witness(u: LaurentPoly, v: LaurentPoly, a: LaurentPoly, b: LaurentPoly):
    """Replace ``u`` by its remainder modulo ``b`` (b monic up to sign) to bound sizes."""
    if b.is_zero() or u.is_zero() or b.valuation() < 0 or u.valuation() < 0 or a.valuation() < 0:
        return u, v
    if abs(b.leading_coefficient()) != 1 or u.degree() < b.degree():
        return u, v
    _, ud = u.to_dense()
    ud = [0] * u.valuation() + ud
    _, bd = b.to_dense()
    bd = [0] * b.valuation() + bd
    lead = bd[-1]
    nb = len(bd) - 1
    for i in range(len(ud) - 1 - nb, -1, -1):
        c = ud[i + nb] * lead
        if c:
            for j, y in enumerate(bd):
                ud[i + j] -= c * y
    u_red = LaurentPoly.from_dense(0, ud[:nb])
    v_red = try_divide(ONE - u_red * a, b)
    if v_red is None:
        return u, v
    return u_red, v_red


def bezout_cyclotomic(a: int, b: int) -> CoprimalityWitness:
    """Integer ``u, v`` with ``u Phi_a + v Phi_b = 1``.

    Solved by extended Euclid over the rationals; the result is integral
    exactly when the resultant is a unit, which is checked rather than assumed.
    """
    if not is_coprime_cyclotomic(a, b):
        raise NotCoprime(f"Phi_{a} and Phi_{b} generate a proper ideal")
    pa, pb = cyclotomic(a), cyclotomic(b)
    g, s, t = rational_xgcd(to_fractions(pa), to_fractions(pb))
    if g != [1]:
        raise NotCoprime(f"Phi_{a} and Phi_{b} share a factor over Q")
    u, v = _integral(s), _integral(t)
    if u is None or v is None:
        raise NotCoprime(f"Phi_{a} and Phi_{b} are coprime over Q but not over Z")
    return CoprimalityWitness(u, v, pa, pb)


def lift_witness(w: CoprimalityWitness, e: int, f: int) -> CoprimalityWitness:
    """From ``u A + v B = 1`` build a witness for ``(A^e, B^f)``.

    Expands ``(uA + vB)^(e+f-1)``; every monomial carries ``A^e`` or ``B^f``.
    """
    if e < 1 or f < 1:
        raise ValueError("powers must be positive")
    A, B = w.a, w.b
    if e == 1 and f == 1:
        return w
    n = e + f - 1
    ua, vb = w.u * A, w.v * B
    ua_pows = [ONE]
    for _ in range(n):
        ua_pows.append(ua_pows[-1] * ua)
    vb_pows = [ONE]
    for _ in range(n):
        vb_pows.append(vb_pows[-1] * vb)
    Ae, Bf = A**e, B**f
    U, V = ZERO, ZERO
    ue, vf = w.u**e, w.v**f
    for j in range(n + 1):
        c = math.comb(n, j)
        if j >= e:
            U = U + c * ue * ua_pows[j - e] * vb_pows[n - j]
        else:
            V = V + c * ua_pows[j] * vf * vb_pows[n - j - f]
    U, V = _reduce_witness(U, V, Ae, Bf)
    return CoprimalityWitness(U, V, Ae, Bf)


def combine_witnesses(w1: CoprimalityWitness, w2: CoprimalityWitness) -> CoprimalityWitness:
    """From witnesses for ``(A, B1)`` and ``(A, B2)`` build one for ``(A, B1 B2)``."""
    if w1.a != w2.a:
        raise ValueError("witnesses must share the first element")
    A = w1.a
    u = w1.u * w2.u * A + w1.u * w2.v * w2.b + w2.u * w1.v * w1.b
    v = w1.v * w2.v
    B = w1.b * w2.b
    u, v = _reduce_witness(u, v, A, B)
    return CoprimalityWitness(u, v, A, B)


def _normalize_factors(factors: Iterable[tuple[int, int]] | Mapping[int, int]) -> list[tuple[int, int]]:
    items = factors.items() if isinstance(factors, Mapping) else factors
    merged: dict[int, int] = {}
    for m, e in items:
        if e < 0:
            raise ValueError("exponents must be non-negative")
        if e:
            merged[m] = merged.get(m, 0) + e
    return sorted(merged.items())


def bezout_products(factors_a, factors_b) -> CoprimalityWitness:
    """Witness for ``(prod Phi_m^e over a-side, prod Phi_m^e over b-side)``.

    Each side is a list of ``(m, e)`` pairs or a mapping ``m -> e``.
    """
    side_a = _normalize_factors(factors_a)
    side_b = _normalize_factors(factors_b)
    for m, _ in side_a:
        for n, _ in side_b:
            if not is_coprime_cyclotomic(m, n):
                raise NotCoprime(f"Phi_{m} and Phi_{n} are not coprime")
    if not side_a or not side_b:
        A = cyclotomic_product(dict(side_a))
        B = cyclotomic_product(dict(side_b))
        if not side_a:  # A = 1
            return CoprimalityWitness(ONE, ZERO, A, B)
        return CoprimalityWitness(ZERO, ONE, A, B)

    # for each a-factor, a witness against the whole b-side
    per_a = []
    for m, e in side_a:
        acc = None
        for n, f in side_b:
            w = lift_witness(bezout_cyclotomic(m, n), e, f)
            acc = w if acc is None else combine_witnesses(acc, w)
        per_a.append(acc)
    # then combine over the a-side by symmetry
    acc = per_a[0].swapped()
    for w in per_a[1:]:
        acc = combine_witnesses(acc, w.swapped())
    return acc.swapped()
