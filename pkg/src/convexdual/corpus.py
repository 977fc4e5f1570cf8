"""Exhaustive and seeded instance families for sweeping the checks."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .adjunction import is_functor
from .lattice import FiniteLattice, PointedLattice
from .errors import InvalidLattice
from .sets import GroundSet, SetFamily, intersection_closure, overline_closure
from .spaces import PreconvexSpace, TopConvexSpace

DEFAULT_SEED = 20240611


def _families(n: int, keep) -> list[SetFamily]:
    g = GroundSet.range(n)
    full = g.full
    inner = [m for m in range(1, full)]
    out = []
    for sel in range(1 << len(inner)):
        masks = {0, full} | {inner[k] for k in range(len(inner)) if sel >> k & 1}
        if keep(masks):
            out.append(SetFamily(g, tuple(masks)))
    return out


def _meet_closed(masks: set[int]) -> bool:
    return all(a & b in masks for a in masks for b in masks)


def _lattice_closed(masks: set[int]) -> bool:
    return all(a & b in masks and a | b in masks for a in masks for b in masks)


@lru_cache(maxsize=None)
def preconvex_families(n: int) -> tuple[SetFamily, ...]:
    """Every preconvexity family on ``n ≤ 3`` points."""
    if n > 3:
        raise ValueError("exhaustive enumeration is limited to 3 points")
    if n == 0:
        return (SetFamily(GroundSet.range(0), (0,)),)
    return tuple(_families(n, _meet_closed))


def preconvex_corpus(max_n: int = 3) -> list[PreconvexSpace]:
    return [PreconvexSpace(f.ground, f) for n in range(max_n + 1) for f in preconvex_families(n)]


@lru_cache(maxsize=None)
def topologies(n: int) -> tuple[SetFamily, ...]:
    """Every topology on ``n ≤ 3`` points, as closed-set families."""
    if n > 3:
        raise ValueError("exhaustive enumeration is limited to 3 points")
    if n == 0:
        return (SetFamily(GroundSet.range(0), (0,)),)
    return tuple(_families(n, _lattice_closed))


def t0_topologies(n: int) -> list[SetFamily]:
    out = []
    for fam in topologies(n):
        closures = [
            min((m for m in fam.masks if m >> i & 1), key=lambda m: bin(m).count("1"))
            for i in range(n)
        ]
        if len(set(closures)) == n:
            out.append(fam)
    return out


def random_preconvex(rng: random.Random, n: int = 4, k: int | None = None) -> PreconvexSpace:
    g = GroundSet.range(n)
    k = rng.randint(0, 5) if k is None else k
    gens = SetFamily(g, tuple(rng.randrange(1 << n) for _ in range(k)) + (0,))
    return PreconvexSpace(g, intersection_closure(gens))


def preconvex_samples(count: int = 50, n: int = 4, seed: int = DEFAULT_SEED) -> list[PreconvexSpace]:
    rng = random.Random(seed)
    return [random_preconvex(rng, n) for _ in range(count)]


def perturb(x: TopConvexSpace, rng: random.Random) -> TopConvexSpace:
    """Add a few random closed and convex generators and reclose."""
    g, full = x.ground, x.ground.full
    extra_closed = tuple(rng.randrange(full + 1) for _ in range(rng.randint(0, 2)))
    extra_convex = tuple(rng.randrange(full + 1) for _ in range(rng.randint(0, 3)))
    closed = overline_closure(x.closed.with_sets(*extra_closed))
    convex = intersection_closure(x.convex.with_sets(*extra_convex, 0))
    return TopConvexSpace(g, closed, convex)


def tc_perturbations(count: int = 200, n: int = 4, seed: int = DEFAULT_SEED) -> list[TopConvexSpace]:
    """Seeded spaces on ``n`` points: ``IS`` of a random preconvexity, then perturbed."""
    rng = random.Random(seed)
    return [perturb(is_functor(random_preconvex(rng, n)), rng) for _ in range(count)]


def tc_corpus(count: int = 200, seed: int = DEFAULT_SEED) -> list[TopConvexSpace]:
    """``IS`` of every preconvexity on ≤ 3 points plus seeded 4-point perturbations."""
    return [is_functor(p) for p in preconvex_corpus()] + tc_perturbations(count, 4, seed)


# lattices


def _canonical(leq: np.ndarray) -> bytes:
    n = len(leq)
    return min(leq[np.ix_(p, p)].tobytes() for p in map(list, permutations(range(n))))


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple[FiniteLattice, ...]:
    """Every lattice with ``n ≤ 6`` elements up to isomorphism.

    Built as a bounded poset: bottom, the ``n - 2`` inner elements under a
    partial order compatible with their labelling, then top.
    """
    if n < 1 or n > 6:
        raise ValueError("lattice enumeration covers 1 to 6 elements")
    if n == 1:
        return (FiniteLattice.chain(1),)
    k = n - 2
    pairs = list(combinations(range(k), 2))
    seen: dict[bytes, FiniteLattice] = {}
    for sel in range(1 << len(pairs)):
        rel = np.eye(k, dtype=bool)
        for b, (i, j) in enumerate(pairs):
            if sel >> b & 1:
                rel[i, j] = True
        closed = rel.copy()
        for m in range(k):
            closed |= np.outer(closed[:, m], closed[m, :])
        if not np.array_equal(closed, rel):
            continue
        leq = np.zeros((n, n), dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        leq[1:n - 1, 1:n - 1] = rel
        key = _canonical(leq[1:n - 1, 1:n - 1]) if k else b""
        if key in seen:
            continue
        try:
            lat = FiniteLattice([str(i) for i in range(n)], leq)
        except InvalidLattice:
            continue
        seen[key] = lat
    return tuple(seen.values())


def all_lattices(max_n: int) -> list[FiniteLattice]:
    return [l for n in range(1, max_n + 1) for l in lattices(n)]


def generating_sets(l: FiniteLattice) -> list[int]:
    """Every chosen set ``S`` with ``a = ⋁(↓a ∩ S)`` for all ``a``."""
    return [s for s in range(1 << l.n) if PointedLattice(l, s).is_generating()]


def pointed_lattices(max_n: int, include_bottom: bool = True) -> list[PointedLattice]:
    out = []
    for l in all_lattices(max_n):
        for s in generating_sets(l):
            if include_bottom or not s >> l.bottom & 1:
                out.append(PointedLattice(l, s))
    return out


def random_topconvex(rng: random.Random, n: int = 4) -> TopConvexSpace:
    g = GroundSet.range(n)
    full = g.full
    closed = overline_closure(SetFamily(g, tuple(rng.randrange(full + 1) for _ in range(rng.randint(0, 3)))))
    convex = intersection_closure(SetFamily(g, tuple(rng.randrange(full + 1) for _ in range(rng.randint(0, 4))) + (0,)))
    return TopConvexSpace(g, closed, convex)

