"""q-integers ``{i}_q = q^i - 1``, falling products and q-factorials.

Besides the expanded polynomials, each quantity has a closed-form cyclotomic
exponent vector: ``{l}_{q,i}`` is ``prod_m Phi_m^(floor(l/m) - floor((l-i)/m))``.
"""

from __future__ import annotations

from typing import Dict, Mapping

from .cyclotomic import cyclotomic_product
from .poly_core import ONE, LaurentPoly

__all__ = [
    "ExponentVector",
    "RangeError",
    "q_int",
    "q_falling",
    "q_factorial",
    "falling_exponents",
    "factorial_exponents",
    "expand",
    "add_exponents",
    "sub_exponents",
]

# m -> exponent of Phi_m; absent keys mean 0
ExponentVector = Dict[int, int]


class RangeError(ValueError):
    pass


def q_int(i: int) -> LaurentPoly:
    """``q^i - 1``; zero for ``i == 0``."""
    return LaurentPoly({i: 1}) - ONE


def q_falling(i: int, n: int) -> LaurentPoly:
    """``{i}_q {i-1}_q ... {i-n+1}_q`` (empty product is 1)."""
    if n < 0:
        raise RangeError(f"falling product length must be >= 0, got {n}")
    result = ONE
    for j in range(n):
        result = result * q_int(i - j)
    return result


def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise RangeError(f"q-factorial needs n >= 0, got {n}")
    return q_falling(n, n)


def falling_exponents(l: int, i: int) -> ExponentVector:
    """Cyclotomic exponents of ``{l}_{q,i}`` for ``0 <= i <= l``.

    >>> falling_exponents(5, 3)
    {1: 3, 2: 1, 3: 1, 4: 1, 5: 1}
    """
    if l < 0 or i < 0 or i > l:
        raise RangeError(f"need 0 <= i <= l, got l={l}, i={i}")
    out = {}
    for m in range(1, l + 1):
        e = l // m - (l - i) // m
        if e:
            out[m] = e
    return out


def factorial_exponents(n: int) -> ExponentVector:
    return falling_exponents(n, n)


def expand(exponents: Mapping[int, int]) -> LaurentPoly:
    return cyclotomic_product(exponents)


def add_exponents(*vectors: Mapping[int, int]) -> ExponentVector:
    out: dict[int, int] = {}
    for v in vectors:
        for m, e in v.items():
            out[m] = out.get(m, 0) + e
    return {m: e for m, e in sorted(out.items()) if e}


def sub_exponents(a: Mapping[int, int], b: Mapping[int, int]) -> ExponentVector:
    return add_exponents(a, {m: -e for m, e in b.items()})
