"""Principal generators of the link-class ideals and membership queries.

For colors ``(l_1, ..., l_n)`` with maximum ``l_max`` and minimum ``l_min``:

* ``Z_a``  is generated by ``{2 l_max + 1}_{q, l_max + 1} / {1}_q``
  (algebraically split, 0-framed links);
* ``Z_rb`` multiplies that by ``g_{l_i}`` for every ``i != i_M``
  (ribbon and boundary links);
* ``Z_Br`` divides the ``Z_a`` generator by ``{l_min}_q!`` and multiplies by
  ``g_{l_i}`` for ``i != i_M, i_m`` (Brunnian links, ``n >= 3``);
* the intersection ``Z_a ∩ Z_Br`` is generated by the exponentwise maximum.

All generators are products of cyclotomic polynomials, so everything is done
on exponent vectors and expanded only on request.

The ``Z_a`` exponent of ``Phi_m`` is ``floor((2l+1)/m) - floor(l/m) - floor(1/m)``,
obtained directly from the falling-product factorization.  The variant with
``floor((l-1)/m)`` in the middle term gives ``Phi_2^2`` at ``l = 2`` and does
not reproduce the expansion ``(q-1)^2 (q+1) (q^2+q+1) (q^2+1) (q^4+...+1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .cyclotomic import cyc_multiplicity
from .habiro_ideals import InternalInconsistency, t_exponents
from .poly_core import ZERO, LaurentPoly, try_divide
from .qcalc import ExponentVector, RangeError, add_exponents, expand

__all__ = [
    "LinkClass",
    "ColorSpec",
    "InvalidSpec",
    "JonesFixture",
    "Membership",
    "base_exponents",
    "z_a_exponents",
    "z_rb_exponents",
    "z_br_exponents",
    "z_intersection_exponents",
    "generator_exponents",
    "z_a_generator",
    "z_rb_generator",
    "z_br_generator",
    "z_intersection_generator",
    "generator",
    "membership",
    "deficits",
    "milnor_fixture",
]


class InvalidSpec(ValueError):
    pass


class LinkClass(enum.Enum):
    ALG_SPLIT = "alg"
    RIBBON_BOUNDARY = "rb"
    BRUNNIAN = "br"
    BRUNNIAN_INTERSECT = "br-cap-a"

    @property
    def needs_three(self) -> bool:
        return self in (LinkClass.BRUNNIAN, LinkClass.BRUNNIAN_INTERSECT)


@dataclass(frozen=True)
class ColorSpec:
    link_class: LinkClass
    colors: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.link_class, LinkClass):
            try:
                object.__setattr__(self, "link_class", LinkClass(self.link_class))
            except ValueError:
                raise InvalidSpec(f"unknown link class {self.link_class!r}") from None
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors:
            raise InvalidSpec("at least one color is required")
        if any(not isinstance(c, int) or c < 0 for c in colors):
            raise InvalidSpec(f"colors must be non-negative integers, got {colors}")
        if self.link_class.needs_three and len(colors) < 3:
            raise InvalidSpec(f"{self.link_class.value} needs n >= 3 components, got {len(colors)}")

    @property
    def l_max(self) -> int:
        return max(self.colors)

    @property
    def l_min(self) -> int:
        return min(self.colors)

    @property
    def i_max(self) -> int:
        """Smallest index attaining the maximum color."""
        return self.colors.index(self.l_max)

    @property
    def i_min(self) -> int:
        """Smallest index other than :attr:`i_max` attaining the minimum color."""
        if len(self.colors) < 2:
            raise InvalidSpec("a single component has no separate minimum index")
        i_max = self.i_max
        lo = min(c for i, c in enumerate(self.colors) if i != i_max)
        return next(i for i, c in enumerate(self.colors) if i != i_max and c == lo)

    def others(self, *skip: int) -> list[int]:
        return [c for i, c in enumerate(self.colors) if i not in skip]


def base_exponents(l_max: int) -> ExponentVector:
    """Exponents of ``{2l+1}_{q,l+1} / {1}_q`` at ``l = l_max``.

    >>> base_exponents(2)
    {1: 2, 2: 1, 3: 1, 4: 1, 5: 1}
    """
    if l_max < 0:
        raise RangeError(f"need l_max >= 0, got {l_max}")
    top = 2 * l_max + 1
    out = {}
    for m in range(1, top + 1):
        e = top // m - l_max // m - (1 if m == 1 else 0)
        if e:
            out[m] = e
    return out


def _sum_t(colors: list[int]) -> ExponentVector:
    return add_exponents(*(t_exponents(l) for l in colors))


def z_a_exponents(spec: ColorSpec) -> ExponentVector:
    return base_exponents(spec.l_max)


def z_rb_exponents(spec: ColorSpec) -> ExponentVector:
    return add_exponents(base_exponents(spec.l_max), _sum_t(spec.others(spec.i_max)))


def _br_correction(spec: ColorSpec) -> dict[int, int]:
    # sum_{i != i_M, i_m} t_{l_i, m} - floor(l_min / m), possibly negative
    lmin = spec.colors[spec.i_min]
    rest = _sum_t(spec.others(spec.i_max, spec.i_min))
    keys = set(rest) | set(range(1, lmin + 1))
    return {m: rest.get(m, 0) - lmin // m for m in sorted(keys)}


def z_br_exponents(spec: ColorSpec) -> ExponentVector:
    if len(spec.colors) < 3:
        raise InvalidSpec("Z_Br needs n >= 3 components")
    out = dict(base_exponents(spec.l_max))
    for m, delta in _br_correction(spec).items():
        out[m] = out.get(m, 0) + delta
    if any(e < 0 for e in out.values()):
        raise InternalInconsistency(f"negative exponent in Z_Br generator for {spec.colors}")
    return {m: e for m, e in sorted(out.items()) if e}


def z_intersection_exponents(spec: ColorSpec) -> ExponentVector:
    if len(spec.colors) < 3:
        raise InvalidSpec("Z_a ∩ Z_Br needs n >= 3 components")
    out = dict(base_exponents(spec.l_max))
    for m, delta in _br_correction(spec).items():
        if delta > 0:
            out[m] = out.get(m, 0) + delta
    return {m: e for m, e in sorted(out.items()) if e}


_BY_CLASS = {
    LinkClass.ALG_SPLIT: z_a_exponents,
    LinkClass.RIBBON_BOUNDARY: z_rb_exponents,
    LinkClass.BRUNNIAN: z_br_exponents,
    LinkClass.BRUNNIAN_INTERSECT: z_intersection_exponents,
}


def generator_exponents(spec: ColorSpec) -> ExponentVector:
    """Exponent vector of the generator for the spec's own link class."""
    return _BY_CLASS[spec.link_class](spec)


def z_a_generator(spec: ColorSpec) -> LaurentPoly:
    return expand(z_a_exponents(spec))


def z_rb_generator(spec: ColorSpec) -> LaurentPoly:
    return expand(z_rb_exponents(spec))


def z_br_generator(spec: ColorSpec) -> LaurentPoly:
    return expand(z_br_exponents(spec))


def z_intersection_generator(spec: ColorSpec) -> LaurentPoly:
    return expand(z_intersection_exponents(spec))


def generator(spec: ColorSpec) -> LaurentPoly:
    return expand(generator_exponents(spec))


class Membership(NamedTuple):
    member: bool
    cofactor: LaurentPoly | None


def membership(p: LaurentPoly, spec: ColorSpec) -> Membership:
    """Is ``p`` in the ideal for ``spec``?  The cofactor carries the unit.

    >>> from cycloideal.poly_core import parse
    >>> membership(parse("-q^-2*(q^2-1)*(q^2+q+1)"), ColorSpec(LinkClass.BRUNNIAN_INTERSECT, (1, 1, 1))).member
    True
    """
    g = generator(spec)
    if p.is_zero():
        return Membership(True, ZERO)
    cofactor = try_divide(p, g)
    return Membership(cofactor is not None, cofactor)


def deficits(p: LaurentPoly, spec: ColorSpec) -> dict[int, tuple[int, int]]:
    """``m -> (required, present)`` for every ``Phi_m`` that ``p`` lacks."""
    if p.is_zero():
        return {}
    out = {}
    for m, need in generator_exponents(spec).items():
        have = cyc_multiplicity(p, m)
        if have < need:
            out[m] = (need, have)
    return out


@dataclass(frozen=True)
class JonesFixture:
    name: str
    n: int
    value: LaurentPoly


def milnor_fixture(n: int) -> JonesFixture:
    """``J`` of Milnor's n-component Brunnian link at colors all 1.

    ``(-1)^n q^(4-2n) Phi_1^(n-2) Phi_2^(n-2) Phi_3 Phi_4^(n-3)``; ``n = 3`` is
    the Borromean rings.
    """
    if n < 3:
        raise RangeError(f"Milnor's link needs n >= 3, got {n}")
    body = expand({1: n - 2, 2: n - 2, 3: 1, 4: n - 3})
    value = body.shift(4 - 2 * n) * (-1) ** n
    return JonesFixture(name=f"M_{n}", n=n, value=value)
