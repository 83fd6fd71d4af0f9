"""Small exact linear algebra over Q(sqrt 5): elimination, null spaces, hyperplanes."""

from __future__ import annotations

from dataclasses import dataclass

from .golden import ONE, ZERO, GoldenNumber, as_golden
from .quaternion import GoldenQuaternion, q_scalar_product

__all__ = [
    "SingularMatrixError",
    "rref",
    "rank",
    "null_space",
    "solve",
    "Hyperplane",
    "hyperplane_through",
    "affine_rank",
]


class SingularMatrixError(ValueError):
    pass


def _rows(m) -> list[list[GoldenNumber]]:
    return [[as_golden(x) for x in row] for row in m]


def rref(m):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    a = _rows(m)
    if not a:
        return a, []
    n = len(a[0])
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(a)) if a[i][col]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def null_space(m, n: int | None = None) -> list[list[GoldenNumber]]:
    """Basis of ``{x : m x = 0}``; ``n`` is the column count when ``m`` is empty."""
    if not m:
        return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    a, pivots = rref(m)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(m, rhs):
    """Solve the square system ``m x = rhs`` exactly."""
    n = len(m)
    aug = [list(row) + [r] for row, r in zip(m, rhs)]
    a, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise SingularMatrixError("matrix is singular")
    return [a[i][n] for i in range(n)]


def _vec(q: GoldenQuaternion) -> list[GoldenNumber]:
    return list(q.coords)


def affine_rank(points) -> int:
    """Dimension of the affine span of ``points``."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    p0 = pts[0]
    return rank([_vec(p - p0) for p in pts[1:]])


@dataclass(frozen=True)
class Hyperplane:
    """The locus ``(normal, x) = offset``; ``(normal, x) < offset`` is the inside.

    Canonical form: positive rescaling so that the first nonzero coordinate
    of the normal is +1 or -1.  The orientation is part of the identity.
    """

    normal: GoldenQuaternion
    offset: GoldenNumber

    @classmethod
    def make(cls, normal: GoldenQuaternion, offset) -> Hyperplane:
        if not normal:
            raise ValueError("hyperplane normal must be nonzero")
        lead = next(c for c in normal.coords if c)
        s = abs(lead).inverse()
        return cls(normal.scale(s), as_golden(offset) * s)

    def value(self, x: GoldenQuaternion) -> GoldenNumber:
        """``(normal, x) - offset``: zero on the plane, negative inside."""
        return q_scalar_product(self.normal, x) - self.offset

    def side(self, x: GoldenQuaternion) -> int:
        return self.value(x).sign()

    def flipped(self) -> Hyperplane:
        return Hyperplane(-self.normal, -self.offset)


def hyperplane_through(points, extra_directions=()) -> Hyperplane | None:
    """Hyperplane containing ``points`` and parallel to ``extra_directions``.

    Returns ``None`` when the constraints do not determine a unique hyperplane.
    Orientation is arbitrary; callers flip as needed.
    """
    pts = list(points)
    p0 = pts[0]
    rows = [_vec(p - p0) for p in pts[1:]] + [_vec(d) for d in extra_directions]
    ns = null_space(rows, 4)
    if len(ns) != 1:
        return None
    normal = GoldenQuaternion(*ns[0])
    return Hyperplane.make(normal, q_scalar_product(normal, p0))
