"""
Exact scalars: reduced rationals and the real quadratic fields Q(sqrt m).

Rationals are plain `fractions.Fraction` values. `QuadValue` holds x + y*sqrt(m)
with the radicand reduced to its squarefree core at construction, so equality is
componentwise and purely rational values always carry radicand 1.
"""
from __future__ import annotations

import operator
import re
import sys
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache

from errors import (
    DivideByZero,
    FieldMismatch,
    MalformedInput,
    NegativeRadicand,
    ZeroDenominator,
)

Rational = Fraction

ZERO = Fraction(0)

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

# radicands read from documents are factored by trial division
MAX_DOCUMENT_RADICAND = 10**12

# exact values may have any number of digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def rat_make(num, den=1):
    """Reduced fraction num/den with the sign carried by the numerator"""
    if den == 0:
        raise ZeroDenominator(f"denominator of {num}/{den} is zero")
    return Fraction(int(num), int(den))


_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(op, a, b):
    """Exact a <op> b for op in add, sub, mul, div"""
    if op not in _RAT_OPS:
        raise ValueError(f"unknown operation: {op}")
    if op == "div" and b == 0:
        raise DivideByZero(f"{a} / 0")
    return _RAT_OPS[op](Fraction(a), Fraction(b))


def encode_rational(value):
    """Rational as its JSON form, the string num/den"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def decode_rational(text):
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise MalformedInput(f"not a rational literal: {text!r}")
    num, _, den = text.strip().partition("/")
    try:
        return rat_make(int(num), int(den or 1))
    except ValueError as e:
        raise MalformedInput(f"unreadable rational literal: {e}") from e


@lru_cache(maxsize=1024)
def squarefree_core(n):
    """Split n >= 1 as f*f*core with core squarefree; returns (f, core)"""
    factor, core = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            factor *= p
        if n % p == 0:
            n //= p
            core *= p
        p += 1
    return factor, core * n


def _sgn(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True, eq=False)
class QuadValue:
    """x + y*sqrt(m) over Q(sqrt m); purely rational values carry radicand 1"""

    rat: Fraction = ZERO
    coef: Fraction = ZERO
    radicand: int = 1

    def __post_init__(self):
        if isinstance(self.rat, float) or isinstance(self.coef, float):
            raise TypeError("QuadValue components must be exact")
        rat, coef, radicand = Fraction(self.rat), Fraction(self.coef), int(self.radicand)
        if radicand < 0:
            raise NegativeRadicand(f"radicand {radicand} is negative")
        if radicand == 0:
            coef = ZERO
        else:
            factor, radicand = squarefree_core(radicand)
            coef *= factor
        if radicand == 1:
            rat, coef = rat + coef, ZERO
        if coef == 0:
            radicand = 1
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def _new(cls, rat, coef, radicand):
        # radicand is already squarefree here
        value = object.__new__(cls)
        if coef == 0:
            radicand = 1
        object.__setattr__(value, "rat", rat)
        object.__setattr__(value, "coef", coef)
        object.__setattr__(value, "radicand", radicand)
        return value

    @property
    def is_rational(self):
        return self.coef == 0

    def as_fraction(self):
        if self.coef != 0:
            raise ValueError(f"{self} is irrational")
        return self.rat

    def conjugate(self):
        return QuadValue._new(self.rat, -self.coef, self.radicand)

    def norm(self):
        return self.rat * self.rat - self.coef * self.coef * self.radicand

    def sign(self):
        return quad_sign(self)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = _common_radicand(self, other)
        return QuadValue._new(self.rat + other.rat, self.coef + other.coef, m)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = _common_radicand(self, other)
        return QuadValue._new(self.rat - other.rat, self.coef - other.coef, m)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = _common_radicand(self, other)
        x1, y1, x2, y2 = self.rat, self.coef, other.rat, other.coef
        if y1 == 0 and y2 == 0:
            return QuadValue._new(x1 * x2, ZERO, 1)
        return QuadValue._new(x1 * x2 + y1 * y2 * m, x1 * y2 + x2 * y1, m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = _common_radicand(self, other)
        if other.rat == 0 and other.coef == 0:
            raise DivideByZero(f"{self} / 0")
        if other.coef == 0:
            return QuadValue._new(self.rat / other.rat, self.coef / other.rat, m)
        norm = other.norm()
        product = self * other.conjugate()
        return QuadValue._new(product.rat / norm, product.coef / norm, m)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return QuadValue._new(-self.rat, -self.coef, self.radicand)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if quad_sign(self) < 0 else self

    def __bool__(self):
        return self.rat != 0 or self.coef != 0

    # ordering and identity

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.rat, self.coef, self.radicand) == (other.rat, other.coef, other.radicand)

    def __hash__(self):
        if self.coef == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.radicand))

    def __lt__(self, other):
        return quad_compare(self, other) is Ordering.LT

    def __le__(self, other):
        return quad_compare(self, other) is not Ordering.GT

    def __gt__(self, other):
        return quad_compare(self, other) is Ordering.GT

    def __ge__(self, other):
        return quad_compare(self, other) is not Ordering.LT

    def __repr__(self):
        return f"QuadValue({self})"

    def __str__(self):
        if self.coef == 0:
            return str(self.rat)
        if self.rat == 0:
            return f"{self.coef}*sqrt({self.radicand})"
        sign = "-" if self.coef < 0 else "+"
        return f"{self.rat} {sign} {abs(self.coef)}*sqrt({self.radicand})"

    # JSON

    def to_json(self):
        return {
            "rat": encode_rational(self.rat),
            "coef": encode_rational(self.coef),
            "radicand": self.radicand,
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            return cls(decode_rational(data))
        if not isinstance(data, dict) or set(data) != {"rat", "coef", "radicand"}:
            raise MalformedInput(f"not a quadratic value: {data!r}")
        radicand = data["radicand"]
        if not isinstance(radicand, int) or isinstance(radicand, bool):
            raise MalformedInput(f"radicand must be an integer: {radicand!r}")
        if not 0 <= radicand <= MAX_DOCUMENT_RADICAND:
            raise MalformedInput(f"radicand out of range 0..{MAX_DOCUMENT_RADICAND}: {radicand}")
        try:
            return cls(decode_rational(data["rat"]), decode_rational(data["coef"]), radicand)
        except NegativeRadicand as e:
            raise MalformedInput(str(e)) from e


def _coerce(value):
    if isinstance(value, QuadValue):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadValue._new(Fraction(value), ZERO, 1)
    return NotImplemented


def as_quad(value):
    """Promote an int, Fraction or QuadValue to a QuadValue"""
    result = _coerce(value)
    if result is NotImplemented:
        raise TypeError(f"cannot use {type(value).__name__} as an exact value")
    return result


def _common_radicand(a, b):
    if a.radicand == b.radicand or b.radicand == 1:
        return a.radicand
    if a.radicand == 1:
        return b.radicand
    raise FieldMismatch(f"values live in Q(sqrt {a.radicand}) and Q(sqrt {b.radicand})")


def common_radicand(*values):
    """The one radicand shared by all values (1 when every value is rational)"""
    m = 1
    for value in values:
        r = as_quad(value).radicand
        if r == 1 or r == m:
            continue
        if m != 1:
            raise FieldMismatch(f"values live in Q(sqrt {m}) and Q(sqrt {r})")
        m = r
    return m


def quad_make(rat, coef, radicand):
    """Normalized rat + coef*sqrt(radicand)"""
    return QuadValue(Fraction(rat), Fraction(coef), radicand)


_QUAD_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def quad_arith(op, a, b):
    if op not in _QUAD_OPS:
        raise ValueError(f"unknown operation: {op}")
    return _QUAD_OPS[op](as_quad(a), as_quad(b))


def quad_sign(a):
    """Exact sign of x + y*sqrt(m)"""
    a = as_quad(a)
    x, y = a.rat, a.coef
    sx, sy = _sgn(x), _sgn(y)
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # opposite signs: the larger square wins; equality needs x = y = 0
    return sx if x * x > y * y * a.radicand else sy


def quad_compare(a, b):
    """Exact ordering of two values in a common field"""
    a, b = as_quad(a), as_quad(b)
    _common_radicand(a, b)
    return Ordering(quad_sign(a - b))


def _decimal_width(n):
    return abs(n).bit_length() * 30103 // 100000 + 2


def quad_to_decimal(a, digits):
    """Decimal rendering rounded half-even to `digits` places; display only"""
    if digits < 1:
        raise ValueError("digits must be at least 1")
    a = as_quad(a)
    with localcontext() as ctx:
        # room for every integer digit plus cancellation between the two terms
        parts = (a.rat.numerator, a.rat.denominator, a.coef.numerator, a.coef.denominator, a.radicand)
        size = sum(_decimal_width(n) for n in parts)
        ctx.prec = digits + 60 + 2 * size
        value = Decimal(a.rat.numerator) / Decimal(a.rat.denominator)
        if a.coef != 0:
            root = Decimal(a.radicand).sqrt()
            value += Decimal(a.coef.numerator) / Decimal(a.coef.denominator) * root
        rounded = value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
        if rounded == 0:
            rounded = abs(rounded)
    return format(rounded, "f")
