"""H4 root-system data extracted from the icosians, and the decomposition of
the fifteen W(H4) weight orbits under Aut(H2 ⊕ H2')."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .golden import GoldenNumber
from .icosian import default_group
from .linalg import solve
from .quaternion import GoldenQuaternion, q_scalar_product
from .symmetry import aut_generators, orbit_partition

__all__ = [
    "NonGenericFunctionalError",
    "RootSystemData",
    "AppendixLine",
    "DEFAULT_FUNCTIONAL",
    "root_system_machinery",
    "reflect",
    "weyl_orbit",
    "appendix_table",
    "EXPECTED_WEIGHT_ORBITS",
    "appendix_multiset",
]

DEFAULT_FUNCTIONAL = (8, 4, 2, 1)


class NonGenericFunctionalError(ValueError):
    pass


def reflect(root: GoldenQuaternion, x: GoldenQuaternion) -> GoldenQuaternion:
    """Reflection of ``x`` in the hyperplane orthogonal to the unit ``root``."""
    return x - root.scale(2 * q_scalar_product(x, root))


@dataclass(frozen=True)
class RootSystemData:
    roots: tuple[GoldenQuaternion, ...]
    positive: tuple[GoldenQuaternion, ...]
    simple_roots: tuple[GoldenQuaternion, ...]
    cartan: tuple[tuple[GoldenNumber, ...], ...]
    weights: tuple[GoldenQuaternion, ...]
    functional: GoldenQuaternion


def root_system_machinery(functional=DEFAULT_FUNCTIONAL) -> RootSystemData:
    """Positive and simple roots for a generic functional, Cartan matrix and weights.

    A positive root is simple exactly when its reflection permutes the
    remaining positive roots.  (Indecomposability as a sum of two positive
    roots does not characterise simple roots in H4.)
    """
    roots = default_group().elements
    v = functional if isinstance(functional, GoldenQuaternion) else GoldenQuaternion(*functional)
    values = {r: q_scalar_product(v, r).sign() for r in roots}
    if any(s == 0 for s in values.values()):
        raise NonGenericFunctionalError(f"functional {v!r} vanishes on a root")
    positive = tuple(r for r in roots if values[r] > 0)
    pos_set = set(positive)
    simple = [
        a for a in positive
        if all(reflect(a, x) in pos_set for x in positive if x != a)
    ]
    if len(simple) != 4:
        raise NonGenericFunctionalError(f"found {len(simple)} simple roots, expected 4")
    # order by the Coxeter chain 1-2-3-4 (the tau-bond at one end)
    simple = _chain_order(simple)
    gram = [[q_scalar_product(a, b) for b in simple] for a in simple]
    cartan = tuple(
        tuple(2 * gram[i][j] / gram[j][j] for j in range(4)) for i in range(4)
    )
    # weights: omega_i = sum_j M_ij alpha_j with 2(omega_i, alpha_k)/(alpha_k, alpha_k) = delta_ik
    weights = []
    for i in range(4):
        rhs = [gram[k][k] / 2 if k == i else 0 for k in range(4)]
        # (omega_i, alpha_k) = sum_j M_ij gram[j][k]; gram is symmetric
        coeffs = solve(gram, rhs)
        w = GoldenQuaternion(0, 0, 0, 0)
        for cf, a in zip(coeffs, simple):
            w = w + a.scale(cf)
        weights.append(w)
    return RootSystemData(roots, positive, tuple(simple), cartan, tuple(weights), v)


def _chain_order(simple):
    """Order simple roots along the path diagram, starting at the tau-bond end."""
    def linked(a, b):
        return a != b and q_scalar_product(a, b) != 0

    degree = {a: sum(linked(a, b) for b in simple) for a in simple}
    ends = [a for a in simple if degree[a] == 1]
    # the end whose bond has (a, b) = -tau/2 (order-5 bond) goes first
    def bond(a):
        other = next(b for b in simple if linked(a, b))
        return q_scalar_product(a, other)

    strongest = min(bond(e) for e in ends)
    ends.sort(key=lambda a: (bond(a) != strongest, a.key))
    chain = [ends[0]]
    while len(chain) < 4:
        nxt = next(b for b in simple if b not in chain and linked(chain[-1], b))
        chain.append(nxt)
    return chain


def weyl_orbit(seed: GoldenQuaternion, simple_roots) -> frozenset:
    """W(H4) orbit of ``seed`` by breadth-first simple reflections."""
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple_roots:
                y = reflect(a, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class AppendixLine:
    subset: tuple[int, ...]
    orbit_size: int
    decomposition: dict

    def as_pair(self):
        return (self.orbit_size, tuple(sorted(self.decomposition.items())))


def _line(subset, data: RootSystemData, aut_gens) -> AppendixLine:
    seed = GoldenQuaternion(0, 0, 0, 0)
    for i in subset:
        seed = seed + data.weights[i]
    orbit = weyl_orbit(seed, data.simple_roots)
    parts = orbit_partition(orbit, aut_gens)
    counts = Counter(len(p) for p in parts)
    return AppendixLine(tuple(subset), len(orbit), dict(sorted(counts.items())))


def appendix_table(data: RootSystemData | None = None, threads: int = 1) -> list[AppendixLine]:
    """One line per nonempty subset of fundamental weights, in subset order."""
    data = data or root_system_machinery()
    aut_gens = aut_generators()
    subsets = [
        s for r in range(1, 5) for s in itertools.combinations(range(4), r)
    ]
    if threads <= 1:
        return [_line(s, data, aut_gens) for s in subsets]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: _line(s, data, aut_gens), subsets))


# expected decompositions: orbit size -> {Aut orbit size: multiplicity}
EXPECTED_WEIGHT_ORBITS = [
    (600, {100: 2, 200: 2}),
    (1200, {200: 3, 100: 2, 400: 1}),
    (720, {100: 1, 200: 3, 20: 1}),
    (120, {20: 1, 100: 1}),
    (3600, {400: 6, 200: 5, 100: 2}),
    (2400, {200: 6, 400: 3}),
    (3600, {200: 5, 400: 6, 100: 2}),
    (1440, {200: 5, 400: 1, 40: 1}),
    (2400, {400: 3, 200: 6}),
    (3600, {400: 6, 200: 5, 100: 2}),
    (7200, {200: 6, 400: 15}),
    (7200, {400: 15, 200: 6}),
    (7200, {400: 15, 200: 6}),
    (7200, {400: 15, 200: 6}),
    (14400, {400: 36}),
]


def appendix_multiset(lines) -> Counter:
    """Multiset of ``(orbit size, sorted decomposition)`` pairs."""
    out = Counter()
    for item in lines:
        if isinstance(item, AppendixLine):
            out[item.as_pair()] += 1
        else:
            size, dec = item
            out[(size, tuple(sorted(dec.items())))] += 1
    return out
