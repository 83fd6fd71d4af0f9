"""Exact arithmetic in the golden field Q(sqrt 5).

A :class:`GoldenNumber` holds ``(a + b*sqrt5) / d`` with integers ``a, b`` and
a positive denominator ``d`` shared by both parts, reduced so that
``gcd(a, b, d) == 1``.  The shared denominator keeps the hot arithmetic on
plain Python ints; the rational parts are exposed as ``Fraction`` properties.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

__all__ = [
    "GoldenNumber",
    "ZERO",
    "ONE",
    "TAU",
    "SIGMA",
    "SQRT5",
    "as_golden",
]


def _rational_parts(x) -> tuple[int, int]:
    if isinstance(x, int):
        return x, 1
    if isinstance(x, Rational):
        return x.numerator, x.denominator
    if isinstance(x, str):
        f = Fraction(x)
        return f.numerator, f.denominator
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@total_ordering
class GoldenNumber:
    """Immutable element ``a + b*sqrt5`` of Q(sqrt 5) with rational ``a, b``."""

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, a=0, b=0):
        an, ad = _rational_parts(a)
        bn, bd = _rational_parts(b)
        d = ad * bd // math.gcd(ad, bd)
        self._set(an * (d // ad), bn * (d // bd), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> GoldenNumber:
        """Build from integer parts over a common denominator (any sign of ``d``)."""
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    # ------------------------------------------------------------------ parts

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt5."""
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """Canonical integer triple ``(a, b, d)`` for ``(a + b*sqrt5)/d``."""
        return self._a, self._b, self._d

    def is_rational(self) -> bool:
        return self._b == 0

    # ------------------------------------------------------------- arithmetic

    def __add__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GoldenNumber._raw(self._a + o._a, self._b + o._b, self._d)
        return GoldenNumber._raw(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GoldenNumber._raw(self._a - o._a, self._b - o._b, self._d)
        return GoldenNumber._raw(
            self._a * o._d - o._a * self._d,
            self._b * o._d - o._b * self._d,
            self._d * o._d,
        )

    def __rsub__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return GoldenNumber._raw(
            self._a * o._a + 5 * self._b * o._b,
            self._a * o._b + self._b * o._a,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2`` (product with the conjugate)."""
        return Fraction(self._a * self._a - 5 * self._b * self._b, self._d * self._d)

    def inverse(self) -> GoldenNumber:
        """Multiplicative inverse via the field norm; raises on zero."""
        n = self._a * self._a - 5 * self._b * self._b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return GoldenNumber._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate: sqrt5 -> -sqrt5 (swaps tau and sigma)."""
        return GoldenNumber._raw(self._a, -self._b, self._d)

    # ------------------------------------------------------------------- sign

    def sign(self) -> int:
        """Exact sign of the real value, in {-1, 0, 1}."""
        a, b = self._a, self._b
        if a >= 0 and b >= 0:
            return 0 if (a == 0 and b == 0) else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        diff = a * a - 5 * b * b
        s = (diff > 0) - (diff < 0)
        return s if a > 0 else -s

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenNumber):
            return self._a == other._a and self._b == other._b and self._d == other._d
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return self == o

    def __lt__(self, other) -> bool:
        o = as_golden(other, strict=False)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            if self._b == 0:
                h = hash(Fraction(self._a, self._d))
            else:
                h = hash((self._a, self._b, self._d))
            self._hash = h
        return h

    # ------------------------------------------------------------ conversion

    def __float__(self) -> float:
        a, b, d = self._a, self._b, self._d
        if b == 0:
            return a / d if abs(a) < 2**53 and d < 2**53 else float(Fraction(a, d))
        # floor(|b| sqrt5 2^k) via isqrt; k is large enough to survive cancellation
        k = 2 * max(abs(a).bit_length(), abs(b).bit_length()) + 80
        s = math.isqrt(5 * b * b << (2 * k))
        num = (a << k) + (s if b > 0 else -s)
        return float(Fraction(num, d << k))

    def to_json(self) -> list[str]:
        a, b = self.a, self.b
        return [f"{a.numerator}/{a.denominator}", f"{b.numerator}/{b.denominator}"]

    @classmethod
    def from_json(cls, pair) -> GoldenNumber:
        a, b = pair
        return cls(Fraction(a), Fraction(b))

    def __repr__(self) -> str:
        return f"GoldenNumber({str(self.a)!r}, {str(self.b)!r})"

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        rad = "√5" if abs(b) == 1 else f"{abs(b)}√5"
        if a == 0:
            return ("-" if b < 0 else "") + rad
        return f"{a} {'-' if b < 0 else '+'} {rad}"

    def __reduce__(self):
        return (GoldenNumber._raw, (self._a, self._b, self._d))


def as_golden(x, strict: bool = True) -> GoldenNumber | None:
    """Coerce ints, Fractions and GoldenNumbers; ``None`` (or TypeError) otherwise."""
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return GoldenNumber._raw(x, 0, 1)
    if isinstance(x, Rational):
        return GoldenNumber._raw(x.numerator, 0, x.denominator)
    if strict:
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenNumber")
    return None


ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)
SQRT5 = GoldenNumber(0, 1)
TAU = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
SIGMA = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))
