"""Isometries ``[p, q]: x -> p x q`` and ``[p, q]*: x -> p x̄ q`` and the finite
groups they generate.

Composition rules (``g ∘ h`` applies ``h`` first)::

    [a,b]  ∘ [c,d]   = [ac, db]
    [a,b]  ∘ [c,d]*  = [ac, db]*
    [a,b]* ∘ [c,d]   = [a d̄, c̄ b]*
    [a,b]* ∘ [c,d]*  = [a d̄, c̄ b]

``[p, q]`` and ``[-p, -q]`` act identically; the constructor picks the
representative whose ``left`` has a positive first nonzero coordinate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .icosian import B, C, IcosianGroup, default_group
from .quaternion import (
    E3,
    Q_ONE,
    GoldenQuaternion,
    q_conjugate,
    q_mul,
    q_scalar_product,
)

__all__ = [
    "CapExceededError",
    "NotInvariantError",
    "NonUnitRootError",
    "Isometry",
    "IDENTITY",
    "FiniteGroup",
    "Orbit",
    "isometry_apply",
    "isometry_compose",
    "reflection_from_root",
    "group_closure",
    "build_standard_groups",
    "orbit_of",
    "stabilizer_of",
    "decompose_under_subgroup",
    "orbit_partition",
    "h2_roots",
]


class CapExceededError(RuntimeError):
    pass


class NotInvariantError(ValueError):
    pass


class NonUnitRootError(ValueError):
    pass


def _first_nonzero_negative(k) -> bool:
    for i in range(0, 8, 2):
        a, b = k[i], k[i + 1]
        if a or b:
            # sign of (a + b sqrt5)
            if a >= 0 and b >= 0:
                return False
            if a <= 0 and b <= 0:
                return True
            diff = a * a - 5 * b * b
            return (diff < 0) if a > 0 else (diff > 0)
    return False


class Isometry:
    """``[left, right]`` (or ``[left, right]*`` when ``star``), canonical up to sign."""

    __slots__ = ("star", "left", "right", "_key", "_hash")

    def __init__(self, left: GoldenQuaternion, right: GoldenQuaternion, star: bool = False):
        if _first_nonzero_negative(left.key):
            left, right = -left, -right
        self.star = bool(star)
        self.left = left
        self.right = right
        self._key = (self.star, left.key, right.key)
        self._hash = hash(self._key)

    @classmethod
    def checked(cls, left, right, star=False) -> Isometry:
        if left.norm_sq() != 1 or right.norm_sq() != 1:
            raise NonUnitRootError("isometry factors must be unit quaternions")
        return cls(left, right, star)

    @property
    def kind(self) -> str:
        return "star" if self.star else "plain"

    @property
    def key(self):
        return self._key

    def __call__(self, x: GoldenQuaternion) -> GoldenQuaternion:
        return isometry_apply(self, x)

    def __matmul__(self, other: Isometry) -> Isometry:
        return isometry_compose(self, other)

    def inverse(self) -> Isometry:
        if self.star:
            return Isometry(self.right, self.left, True)
        return Isometry(q_conjugate(self.left), q_conjugate(self.right))

    def __pow__(self, n: int) -> Isometry:
        g = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = isometry_compose(out, g)
        return out

    def order(self) -> int:
        g, n = self, 1
        while g != IDENTITY:
            g = isometry_compose(g, self)
            n += 1
        return n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other) -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"[{self.left!r}, {self.right!r}]{'*' if self.star else ''}"


IDENTITY = Isometry(Q_ONE, Q_ONE)


def isometry_apply(g: Isometry, x: GoldenQuaternion) -> GoldenQuaternion:
    if g.star:
        x = q_conjugate(x)
    return q_mul(q_mul(g.left, x), g.right)


def isometry_compose(g: Isometry, h: Isometry) -> Isometry:
    """The isometry ``x -> g(h(x))``."""
    if not g.star:
        return Isometry(q_mul(g.left, h.left), q_mul(h.right, g.right), h.star)
    return Isometry(
        q_mul(g.left, q_conjugate(h.right)),
        q_mul(q_conjugate(h.left), g.right),
        not h.star,
    )


def reflection_from_root(r: GoldenQuaternion) -> Isometry:
    """The reflection ``[r, -r]*`` in the hyperplane orthogonal to the unit ``r``."""
    if r.norm_sq() != 1:
        raise NonUnitRootError(f"root {r!r} does not have unit norm")
    return Isometry(r, -r, True)


@dataclass(frozen=True)
class FiniteGroup:
    elements: frozenset
    generators: tuple = ()
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_closed(self) -> bool:
        els = self.elements
        return IDENTITY in els and all(
            isometry_compose(g, h) in els for g in els for h in els
        )

    def conjugate_by(self, g: Isometry) -> FiniteGroup:
        gi = g.inverse()
        return FiniteGroup(
            frozenset(isometry_compose(isometry_compose(g, h), gi) for h in self.elements),
            tuple(isometry_compose(isometry_compose(g, h), gi) for h in self.generators),
            self.name,
        )


def group_closure(generators: Iterable[Isometry], cap: int = 20000, name: str = "") -> FiniteGroup:
    """Smallest set containing ``generators`` and the identity, closed under composition."""
    gens = tuple(generators)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = isometry_compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise CapExceededError(f"group closure exceeded cap {cap}")
        frontier = nxt
    return FiniteGroup(frozenset(seen), gens, name)


def h2_roots() -> list[GoldenQuaternion]:
    """The twenty roots ``b^m, e3 b^m`` of H2 ⊕ H2'."""
    powers = [B**m for m in range(10)]
    return powers + [q_mul(E3, p) for p in powers]


def _h4_generators(group: IcosianGroup | None = None) -> tuple[Isometry, ...]:
    return (
        Isometry(B, Q_ONE),
        Isometry(C, Q_ONE),
        Isometry(Q_ONE, B),
        Isometry(Q_ONE, C),
        Isometry(Q_ONE, Q_ONE, True),
    )


def aut_generators() -> tuple[Isometry, ...]:
    """The four simple reflections of H2 ⊕ H2' plus the diagram symmetry ``[e3, 1]``."""
    e3b = q_mul(E3, B)
    return (
        reflection_from_root(B),
        reflection_from_root(Q_ONE),
        reflection_from_root(e3b),
        reflection_from_root(E3),
        Isometry(E3, Q_ONE),
    )


def build_standard_groups(include_h4: bool = True) -> dict[str, FiniteGroup]:
    """W(H2), W(H2'), their product, C4, Aut(H2 ⊕ H2'), W(H3) and (optionally) W(H4)."""
    bbar = q_conjugate(B)
    I = default_group()
    groups = {
        "W(H2)": group_closure([Isometry(B, B), Isometry(Q_ONE, -Q_ONE, True)], name="W(H2)"),
        "W(H2')": group_closure([Isometry(bbar, B), Isometry(E3, -E3, True)], name="W(H2')"),
        "C4": group_closure([Isometry(E3, Q_ONE)], name="C4"),
    }
    refl = aut_generators()
    groups["W(H2)xW(H2')"] = group_closure(refl[:4], name="W(H2)xW(H2')")
    groups["Aut(H2+H2')"] = group_closure(refl, name="Aut(H2+H2')")
    w3_gens = []
    for p in I.elements:
        w3_gens.append(Isometry(p, q_conjugate(p)))
        w3_gens.append(Isometry(p, q_conjugate(p), True))
    # closing the full element list confirms it is already a group
    groups["W(H3)"] = group_closure(w3_gens, name="W(H3)")
    if include_h4:
        groups["W(H4)"] = group_closure(_h4_generators(), name="W(H4)")
    return groups


def aut_set_form() -> frozenset:
    """``{[p,q], [p,q]* : p, q roots of H2 ⊕ H2'}`` as a set of isometries."""
    roots = h2_roots()
    return frozenset(
        Isometry(p, q, s) for p in roots for q in roots for s in (False, True)
    )


@dataclass(frozen=True)
class Orbit:
    seed: GoldenQuaternion
    points: frozenset = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)


def _orbit_bfs(gens, x, apply):
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = apply(g, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def _apply_any(g, x):
    return g(x) if callable(g) and not isinstance(g, Isometry) else isometry_apply(g, x)


def _group_gens(g: FiniteGroup):
    return g.generators if g.generators else tuple(g.elements)


def orbit_of(g: FiniteGroup, x: GoldenQuaternion) -> Orbit:
    """Full orbit of ``x``, by breadth-first application of the generators."""
    return Orbit(x, frozenset(_orbit_bfs(_group_gens(g), x, _apply_any)))


def stabilizer_of(g: FiniteGroup, x: GoldenQuaternion) -> FiniteGroup:
    """Subgroup of ``g`` fixing ``x``."""
    els = frozenset(h for h in g.elements if isometry_apply(h, x) == x)
    return FiniteGroup(els, tuple(sorted(els)), f"Stab({g.name})")


def orbit_partition(points: Iterable[GoldenQuaternion], gens, apply=_apply_any) -> list[frozenset]:
    """Partition ``points`` into orbits; raises if some image leaves the set."""
    pts = set(points)
    remaining = set(pts)
    out = []
    for x in sorted(pts, key=lambda q: q.key):
        if x not in remaining:
            continue
        orb = _orbit_bfs(gens, x, apply)
        if not orb <= pts:
            raise NotInvariantError("point set is not invariant under the group")
        remaining -= orb
        out.append(frozenset(orb))
    return out


def decompose_under_subgroup(points: Iterable[GoldenQuaternion], h) -> list[int]:
    """Sorted orbit sizes of ``points`` under ``h`` (a FiniteGroup or a generator list)."""
    gens = _group_gens(h) if isinstance(h, FiniteGroup) else tuple(h)
    return sorted(len(o) for o in orbit_partition(points, gens))


def decomposition_counter(sizes: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(sizes).items()))


def preserves_scalar_products(g: Isometry, pairs) -> bool:
    return all(
        q_scalar_product(isometry_apply(g, x), isometry_apply(g, y)) == q_scalar_product(x, y)
        for x, y in pairs
    )
