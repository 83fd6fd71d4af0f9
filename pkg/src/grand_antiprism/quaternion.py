"""Quaternions with golden-field coordinates.

``GoldenQuaternion`` keeps all eight integer parts of its four coordinates
over one shared denominator::

    q_i = (a_i + b_i * sqrt5) / D

The integer 9-tuple is canonical (``D > 0``, overall gcd 1), so it doubles as
the hash/equality key.  Products stay in integer arithmetic until the single
final reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

from .golden import GoldenNumber, as_golden

__all__ = [
    "GoldenQuaternion",
    "OrthonormalBasis",
    "Q_ONE",
    "Q_ZERO",
    "E1",
    "E2",
    "E3",
    "q_mul",
    "q_conjugate",
    "q_scalar_product",
    "q_in_basis",
]


def _canon(k: list[int]) -> tuple[int, ...]:
    d = k[8]
    if d < 0:
        k = [-x for x in k]
    g = math.gcd(*k)
    if g > 1:
        k = [x // g for x in k]
    return tuple(k)


@total_ordering
class GoldenQuaternion:
    """``q0 + q1 e1 + q2 e2 + q3 e3`` with exact golden coordinates."""

    __slots__ = ("_k", "_hash")

    def __init__(self, q0=0, q1=0, q2=0, q3=0):
        coords = [as_golden(x) for x in (q0, q1, q2, q3)]
        d = 1
        for c in coords:
            d = d * c._d // math.gcd(d, c._d)
        k = []
        for c in coords:
            m = d // c._d
            k.append(c._a * m)
            k.append(c._b * m)
        k.append(d)
        self._k = _canon(k)
        self._hash = hash(self._k)

    @classmethod
    def _from_key(cls, k) -> GoldenQuaternion:
        obj = object.__new__(cls)
        obj._k = _canon(list(k))
        obj._hash = hash(obj._k)
        return obj

    @classmethod
    def from_parts(cls, a0, b0, a1, b1, a2, b2, a3, b3, d) -> GoldenQuaternion:
        """From integer parts: ``q_i = (a_i + b_i sqrt5)/d``."""
        return cls._from_key((a0, b0, a1, b1, a2, b2, a3, b3, d))

    # ------------------------------------------------------------ components

    @property
    def key(self) -> tuple[int, ...]:
        return self._k

    def coord(self, i: int) -> GoldenNumber:
        k = self._k
        return GoldenNumber._raw(k[2 * i], k[2 * i + 1], k[8])

    @property
    def q0(self) -> GoldenNumber:
        return self.coord(0)

    @property
    def q1(self) -> GoldenNumber:
        return self.coord(1)

    @property
    def q2(self) -> GoldenNumber:
        return self.coord(2)

    @property
    def q3(self) -> GoldenNumber:
        return self.coord(3)

    @property
    def coords(self) -> tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
        return tuple(self.coord(i) for i in range(4))

    def real(self) -> GoldenNumber:
        return self.coord(0)

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other):
        if not isinstance(other, GoldenQuaternion):
            return NotImplemented
        p, q = self._k, other._k
        dp, dq = p[8], q[8]
        if dp == dq:
            return GoldenQuaternion._from_key([p[i] + q[i] for i in range(8)] + [dp])
        return GoldenQuaternion._from_key(
            [p[i] * dq + q[i] * dp for i in range(8)] + [dp * dq]
        )

    def __neg__(self):
        k = self._k
        return GoldenQuaternion._from_key([-x for x in k[:8]] + [k[8]])

    def __sub__(self, other):
        if not isinstance(other, GoldenQuaternion):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> GoldenQuaternion:
        """Multiply every coordinate by the golden scalar ``s``."""
        s = as_golden(s)
        sa, sb, sd = s._a, s._b, s._d
        k = self._k
        out = []
        for i in range(0, 8, 2):
            a, b = k[i], k[i + 1]
            out.append(a * sa + 5 * b * sb)
            out.append(a * sb + b * sa)
        out.append(k[8] * sd)
        return GoldenQuaternion._from_key(out)

    def __mul__(self, other):
        if isinstance(other, GoldenQuaternion):
            return q_mul(self, other)
        s = as_golden(other, strict=False)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        s = as_golden(other, strict=False)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __truediv__(self, other):
        s = as_golden(other, strict=False)
        if s is None:
            return NotImplemented
        return self.scale(s.inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Q_ONE
        while n:
            if n & 1:
                result = q_mul(result, base)
            base = q_mul(base, base)
            n >>= 1
        return result

    def conjugate(self) -> GoldenQuaternion:
        return q_conjugate(self)

    def norm_sq(self) -> GoldenNumber:
        return q_scalar_product(self, self)

    def inverse(self) -> GoldenQuaternion:
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of the zero quaternion")
        return q_conjugate(self).scale(n.inverse())

    def __bool__(self) -> bool:
        return any(self._k[:8])

    # -------------------------------------------------------------- identity

    def __eq__(self, other) -> bool:
        if not isinstance(other, GoldenQuaternion):
            return NotImplemented
        return self._k == other._k

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        if not isinstance(other, GoldenQuaternion):
            return NotImplemented
        return self.coords < other.coords

    def to_floats(self) -> tuple[float, float, float, float]:
        return tuple(float(c) for c in self.coords)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]

    @classmethod
    def from_json(cls, data) -> GoldenQuaternion:
        return cls(*(GoldenNumber.from_json(x) for x in data))

    def __repr__(self) -> str:
        return "GoldenQuaternion({})".format(", ".join(str(c) for c in self.coords))

    def __reduce__(self):
        return (GoldenQuaternion._from_key, (self._k,))


def q_mul(p: GoldenQuaternion, q: GoldenQuaternion) -> GoldenQuaternion:
    """Hamilton product, with ``e_i e_j = -delta_ij + eps_ijk e_k``."""
    a0, b0, a1, b1, a2, b2, a3, b3, dp = p._k
    c0, d0, c1, d1, c2, d2, c3, d3, dq = q._k

    # (x + y sqrt5)(u + v sqrt5) = (xu + 5yv) + (xv + yu) sqrt5
    def m(x, y, u, v):
        return x * u + 5 * y * v, x * v + y * u

    r00 = m(a0, b0, c0, d0)
    r01 = m(a0, b0, c1, d1)
    r02 = m(a0, b0, c2, d2)
    r03 = m(a0, b0, c3, d3)
    r10 = m(a1, b1, c0, d0)
    r11 = m(a1, b1, c1, d1)
    r12 = m(a1, b1, c2, d2)
    r13 = m(a1, b1, c3, d3)
    r20 = m(a2, b2, c0, d0)
    r21 = m(a2, b2, c1, d1)
    r22 = m(a2, b2, c2, d2)
    r23 = m(a2, b2, c3, d3)
    r30 = m(a3, b3, c0, d0)
    r31 = m(a3, b3, c1, d1)
    r32 = m(a3, b3, c2, d2)
    r33 = m(a3, b3, c3, d3)
    return GoldenQuaternion._from_key((
        r00[0] - r11[0] - r22[0] - r33[0], r00[1] - r11[1] - r22[1] - r33[1],
        r01[0] + r10[0] + r23[0] - r32[0], r01[1] + r10[1] + r23[1] - r32[1],
        r02[0] - r13[0] + r20[0] + r31[0], r02[1] - r13[1] + r20[1] + r31[1],
        r03[0] + r12[0] - r21[0] + r30[0], r03[1] + r12[1] - r21[1] + r30[1],
        dp * dq,
    ))


def q_conjugate(q: GoldenQuaternion) -> GoldenQuaternion:
    k = q._k
    return GoldenQuaternion._from_key(
        (k[0], k[1], -k[2], -k[3], -k[4], -k[5], -k[6], -k[7], k[8])
    )


def q_scalar_product(p: GoldenQuaternion, q: GoldenQuaternion) -> GoldenNumber:
    """Euclidean scalar product ``(p, q) = (p̄q + q̄p)/2``, i.e. the coordinate dot product."""
    pk, qk = p._k, q._k
    ra = rb = 0
    for i in range(0, 8, 2):
        x, y, u, v = pk[i], pk[i + 1], qk[i], qk[i + 1]
        ra += x * u + 5 * y * v
        rb += x * v + y * u
    return GoldenNumber._raw(ra, rb, pk[8] * qk[8])


Q_ZERO = GoldenQuaternion(0, 0, 0, 0)
Q_ONE = GoldenQuaternion(1, 0, 0, 0)
E1 = GoldenQuaternion(0, 1, 0, 0)
E2 = GoldenQuaternion(0, 0, 1, 0)
E3 = GoldenQuaternion(0, 0, 0, 1)


@dataclass(frozen=True)
class OrthonormalBasis:
    d0: GoldenQuaternion
    d1: GoldenQuaternion
    d2: GoldenQuaternion
    d3: GoldenQuaternion

    def __post_init__(self):
        vs = self.vectors
        for i in range(4):
            for j in range(4):
                if q_scalar_product(vs[i], vs[j]) != (1 if i == j else 0):
                    raise ValueError("basis is not orthonormal")

    @property
    def vectors(self) -> tuple[GoldenQuaternion, ...]:
        return (self.d0, self.d1, self.d2, self.d3)

    @classmethod
    def left_translate(cls, v: GoldenQuaternion) -> OrthonormalBasis:
        """The basis ``d_i = e_i v`` (with ``e_0 = 1``) for a unit quaternion ``v``."""
        return cls(v, q_mul(E1, v), q_mul(E2, v), q_mul(E3, v))


def q_in_basis(q: GoldenQuaternion, basis: OrthonormalBasis) -> tuple[GoldenNumber, ...]:
    """Coordinates of ``q`` in an orthonormal basis, by scalar products."""
    return tuple(q_scalar_product(q, d) for d in basis.vectors)
