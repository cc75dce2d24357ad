"""Exact Laurent polynomials in one variable ``q`` over the integers.

Polynomials are stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients, so equality is map equality and multiplication by ``q^k`` is a
key shift.  Arithmetic on large operands is done on dense coefficient lists
(and, past a size threshold, by Kronecker substitution into Python ints).

>>> p = parse("(q-1)*(q+1)")
>>> str(p)
'-1 + q^2'
>>> str(parse("-1 + 2*q^3 + q^-2"))
'q^-2 - 1 + 2*q^3'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "UnitNormalForm",
    "PolySyntaxError",
    "NotDivisible",
    "ZeroInput",
    "parse",
    "to_string",
    "add",
    "sub",
    "mul",
    "neg",
    "divide_exact",
    "try_divide",
    "normalize_unit",
    "ZERO",
    "ONE",
    "Q",
]


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class NotDivisible(ArithmeticError):
    pass


class ZeroInput(ValueError):
    pass


Coercible = Union["LaurentPoly", int]

# Operand length (in coefficients) above which multiplication packs into ints.
_KRONECKER_MIN = 48


class LaurentPoly:
    """Immutable element of Z[q, q^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coefficient} if coefficient else {})

    @classmethod
    def from_dense(cls, valuation: int, coeffs: Iterable[int]) -> LaurentPoly:
        return cls._raw({valuation + i: c for i, c in enumerate(coeffs) if c})

    def to_dense(self) -> tuple[int, list[int]]:
        """Return ``(valuation, coefficients)`` from the lowest exponent up."""
        if not self._terms:
            return 0, []
        lo, hi = min(self._terms), max(self._terms)
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def degree(self) -> int:
        if not self._terms:
            raise ZeroInput("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ZeroInput("valuation of the zero polynomial")
        return min(self._terms)

    def span(self) -> int:
        """Degree after shifting the lowest exponent to 0."""
        return self.degree() - self.valuation()

    def leading_coefficient(self) -> int:
        return self._terms[self.degree()]

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def evaluate(self, x: int) -> int:
        """Evaluate at a nonzero integer (or at any integer if no negative exponents)."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x**e
            else:
                total += c * Fraction(1, x ** (-e))
        return total

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({eb + e: cb * c for e, c in a.items()})
        va, da = self.to_dense()
        vb, db = other.to_dense()
        return LaurentPoly.from_dense(va + vb, _dense_mul(da, db))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_unit():
                (e, c), = self._terms.items()
                return LaurentPoly._raw({e * n: c ** (-n)})
            raise NotDivisible("negative power of a non-unit")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __floordiv__(self, other: Coercible) -> LaurentPoly:
        return divide_exact(self, _coerce(other))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"LaurentPoly('{to_string(self)}')"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


# -- dense kernels --------------------------------------------------------


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    if len(b) >= _KRONECKER_MIN:
        return _kronecker_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for j, cb in enumerate(b):
        if cb:
            for i, ca in enumerate(a):
                out[i + j] += ca * cb
    return out


def _kronecker_mul(a: list[int], b: list[int]) -> list[int]:
    """Multiply by packing signed coefficients into one integer per operand."""
    bound = max(abs(c) for c in a) * max(abs(c) for c in b) * len(b)
    # slot width in bytes, with one spare bit for the sign offset
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width
    pa = _pack(a, bits)
    pb = _pack(b, bits)
    n = len(a) + len(b) - 1
    half = 1 << (bits - 1)
    # offset every slot by 2^(bits-1) so all slots become non-negative
    offset = int.from_bytes((half.to_bytes(width, "little")) * n, "little")
    raw = (pa * pb + offset).to_bytes(width * n, "little")
    return [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    ]


def _pack(coeffs: list[int], bits: int) -> int:
    # Horner from the top: signed coefficients pack correctly with borrows
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _dense_divmod_exact(a: list[int], b: list[int]) -> list[int] | None:
    """Exact quotient of dense polynomials (constant terms first), or None.

    Long division from the top; fails as soon as a leading coefficient does
    not divide or a non-zero remainder survives.
    """
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    r = list(a)
    lead = b[-1]
    qcoeffs = [0] * (da - db + 1)
    unit = lead in (1, -1)
    for i in range(da - db, -1, -1):
        top = r[i + db]
        if not top:
            continue
        if unit:
            c = top * lead
        else:
            c, rem = divmod(top, lead)
            if rem:
                return None
        qcoeffs[i] = c
        for j in range(db + 1):
            if b[j]:
                r[i + j] -= c * b[j]
    if any(r[:db]):
        return None
    return qcoeffs


# -- module-level operations -----------------------------------------------


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def sub(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a - b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def try_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Return ``a / b`` if it lies in Z[q, q^-1], else ``None``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    va, da = a.to_dense()
    vb, db = b.to_dense()
    if len(db) == 1:
        c = db[0]
        if any(x % c for x in da):
            return None
        return LaurentPoly.from_dense(va - vb, [x // c for x in da])
    quotient = _dense_divmod_exact(da, db)
    if quotient is None:
        return None
    return LaurentPoly.from_dense(va - vb, quotient)


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient in the Laurent ring.

    Raises ``NotDivisible`` when ``b`` does not divide ``a`` and
    ``ZeroDivisionError`` when ``b`` is zero.

    >>> str(divide_exact(parse("q^3-1"), parse("q-1")))
    '1 + q + q^2'
    """
    result = try_divide(a, b)
    if result is None:
        raise NotDivisible(f"{to_string(b)} does not divide {to_string(a)}")
    return result


@dataclass(frozen=True)
class UnitNormalForm:
    """``sign * content * q^q_power * primitive_part``.

    ``primitive_part`` has lowest exponent 0, positive leading coefficient and
    integer content 1.
    """

    sign: int
    q_power: int
    primitive_part: LaurentPoly
    content: int = 1

    def unit(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.q_power, self.sign)

    def reconstruct(self) -> LaurentPoly:
        return self.primitive_part.shift(self.q_power) * (self.sign * self.content)


def normalize_unit(a: LaurentPoly) -> UnitNormalForm:
    """Split off the unit ``±q^k`` and the integer content.

    >>> normalize_unit(parse("-q^-3*(q-1)"))
    UnitNormalForm(sign=-1, q_power=-3, primitive_part=LaurentPoly('-1 + q'), content=1)
    """
    if a.is_zero():
        raise ZeroInput("normal form of the zero polynomial")
    v = a.valuation()
    sign = 1 if a.leading_coefficient() > 0 else -1
    content = a.content()
    factor = sign * content
    prim = LaurentPoly._raw({e - v: c // factor for e, c in a._terms.items()})
    return UnitNormalForm(sign=sign, q_power=v, primitive_part=prim, content=content)


# -- text format -------------------------------------------------------------


def to_string(p: LaurentPoly) -> str:
    """Canonical text: ascending exponents, ``c*q^e`` terms, ``0`` for zero."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p._terms):
        c = p._terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), m.start(1)))
        else:
            ch = m.group(2)
            if ch not in "q^+-*()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, m.start(2))
            tokens.append((ch, ch, m.start(2)))
        pos = m.end()
    tokens.append(("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, message: str):
        raise PolySyntaxError(message, self.text, self.tokens[self.i][2])

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek())[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.take("*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> LaurentPoly:
        kind = self.peek()
        if kind == "INT":
            return LaurentPoly.constant(int(self.take("INT")[1]))
        if kind == "q":
            self.take("q")
            if self.peek() == "^":
                self.take("^")
                neg_exp = False
                if self.peek() == "-":
                    self.take("-")
                    neg_exp = True
                e = int(self.take("INT")[1])
                return LaurentPoly.monomial(-e if neg_exp else e)
            return Q
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        self.error("expected integer, 'q' or '('")


def parse(text: str) -> LaurentPoly:
    """Parse the polynomial grammar (see README) into canonical form.

    >>> parse("q^-1 + 2").terms == {-1: 1, 0: 2}
    True
    """
    parser = _Parser(text)
    if parser.peek() == "EOF":
        parser.error("empty expression")
    result = parser.expr()
    if parser.peek() != "EOF":
        parser.error("unexpected trailing input")
    return result
