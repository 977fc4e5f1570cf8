"""Partial-order convexity on the symmetric group.

Permutations are one-line tuples over ``1..n``: ``p[i-1] = σ(i)``.
Composition is right to left, ``(στ)(i) = σ(τ(i))``.  Points of
``perm_space(n)`` are the permutations in lexicographic order, labelled by
their one-line notation (``"132"``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Literal

import numpy as np

from .errors import NotInjective, OutOfRange, SearchSpaceTooLarge
from .examples import FiniteMetric
from .sets import GroundSet, SetFamily, bits_of
from .spaces import DEFAULT_LIMIT, SpaceMap, TopConvexSpace, all_functions, is_tc_hom

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reversal(n: int) -> Perm:
    """ρ, reversing the order of ``1..n``."""
    return tuple(range(n, 0, -1))


def adjacent(n: int, i: int) -> Perm:
    """τᵢ, swapping ``i`` and ``i+1``."""
    p = list(identity(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(s: Perm, t: Perm) -> Perm:
    """``s ∘ t``."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, v in enumerate(s, 1):
        out[v - 1] = i
    return tuple(out)


def inversions(s: Perm) -> int:
    return sum(1 for i, j in combinations(range(len(s)), 2) if s[i] > s[j])


def label(s: Perm) -> str:
    return "".join(map(str, s)) if len(s) < 10 else ",".join(map(str, s))


def all_perms(n: int) -> list[Perm]:
    return list(permutations(range(1, n + 1)))


def _check_n(n: int, hi: int = 5):
    if not 1 <= n <= hi:
        raise OutOfRange(f"n must be between 1 and {hi}, got {n}")


def perm_ground(n: int) -> GroundSet:
    return GroundSet(tuple(label(p) for p in all_perms(n)))


def half_space(n: int, i: int, j: int) -> int:
    """Mask of ``C_ij = {σ : σ(i) < σ(j)}``."""
    return sum(1 << k for k, p in enumerate(all_perms(n)) if p[i - 1] < p[j - 1])


def half_spaces(n: int) -> dict[tuple[int, int], int]:
    return {(i, j): half_space(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}


def order_sets(n: int) -> tuple[int, ...]:
    """Every ``P_⪯`` together with ∅, as sorted masks.

    ``P_⪯`` is the intersection of the half-spaces ``C_ij`` over ``i ≺ j``,
    and a cyclic relation gives ∅, so the family is the closure of ``{X}``
    under intersecting with one half-space at a time.
    """
    hs = list(half_spaces(n).values())
    full = (1 << len(all_perms(n))) - 1
    seen = {full}
    stack = [full]
    while stack:
        a = stack.pop()
        for h in hs:
            b = a & h
            if b not in seen:
                seen.add(b)
                stack.append(b)
    seen.add(0)
    return tuple(sorted(seen))


def perm_space(n: int) -> TopConvexSpace:
    _check_n(n)
    if n < 2:
        raise OutOfRange("n must be at least 2")
    g = perm_ground(n)
    return TopConvexSpace(g, SetFamily.power_set(g), SetFamily(g, order_sets(n)))


def coxeter_distance(s: Perm, t: Perm) -> int:
    """Shortest word length of ``t s⁻¹`` in adjacent transpositions."""
    return inversions(compose(t, inverse(s)))


def coxeter_metric(n: int) -> FiniteMetric:
    _check_n(n)
    ps = all_perms(n)
    return FiniteMetric.from_function(perm_ground(n), lambda a, b: coxeter_distance(ps[a], ps[b]))


def alpha(s: Perm, g: tuple[int, ...]) -> Perm:
    vals = [s[x - 1] for x in g]
    return tuple(sum(1 for v in vals if v <= w) for w in vals)


def delta(s: Perm, g: tuple[int, ...]) -> Perm:
    vals = [s[x - 1] for x in g]
    return tuple(sum(1 for v in vals if v >= w) for w in vals)


def alpha_delta(n: int, m: int, g, variant: Literal["alpha", "delta"] = "alpha") -> SpaceMap:
    """The map ``S_n -> S_m`` induced by an injection ``g: {1..m} -> {1..n}``."""
    g = tuple(int(x) for x in g)
    if len(g) != m or len(set(g)) != m or any(not 1 <= x <= n for x in g):
        raise NotInjective(f"{g} is not an injection {{1..{m}}} -> {{1..{n}}}")
    fn = {"alpha": alpha, "delta": delta}[variant]
    cod = {p: k for k, p in enumerate(all_perms(m))}
    return SpaceMap(perm_ground(n), perm_ground(m), tuple(cod[fn(p, g)] for p in all_perms(n)))


def injections(n: int, m: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, n + 1), m))


def alpha_delta_family(n: int, m: int) -> set[tuple[int, ...]]:
    """Assignments of every ``α_g`` and ``δ_g``, duplicates merged."""
    return {
        alpha_delta(n, m, g, v).assignment for g in injections(n, m) for v in ("alpha", "delta")
    }


def half_space_cover_failures(n: int) -> list[tuple]:
    """Distinct ``i, j, k, l`` and a third half-space containing ``C_ij ∩ C_kl``."""
    hs = half_spaces(n)
    out = []
    for i, j, k, l in permutations(range(1, n + 1), 4):
        both = hs[i, j] & hs[k, l]
        for st, h in hs.items():
            if st not in ((i, j), (k, l)) and both & ~h == 0:
                out.append(((i, j), (k, l), st))
    return out


def perm_automorphism(n: int, theta: Perm, pi: Perm) -> SpaceMap:
    """``σ ↦ θ σ π``."""
    ps = all_perms(n)
    pos = {p: k for k, p in enumerate(ps)}
    g = perm_ground(n)
    return SpaceMap(g, g, tuple(pos[compose(theta, compose(p, pi))] for p in ps))


def expected_automorphisms(n: int) -> set[tuple[int, ...]]:
    return {
        perm_automorphism(n, theta, pi).assignment
        for theta in (identity(n), reversal(n))
        for pi in all_perms(n)
    }


def _is_automorphism(assignment, convex: frozenset, masks) -> bool:
    # a bijection of a finite space is an automorphism iff it pulls the convex family onto itself
    n = len(assignment)
    fib = [0] * n
    for i, j in enumerate(assignment):
        fib[j] |= 1 << i
    for c in masks:
        pre = 0
        for j in bits_of(c):
            pre |= fib[j]
        if pre not in convex:
            return False
    return True


def automorphisms_raw(n: int, limit: int = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    """Filter every bijection of ``S_n``."""
    space = perm_space(n)
    size = len(space.ground)
    count = 1
    for k in range(2, size + 1):
        count *= k
    if count > limit:
        raise SearchSpaceTooLarge(f"{size}! bijections exceeds limit {limit}")
    convex, masks = space.convex.members, space.convex.masks
    return {a for a in permutations(range(size)) if _is_automorphism(a, convex, masks)}


def automorphisms_search(n: int) -> set[tuple[int, ...]]:
    """Backtracking over bijections, pruned by invariants every automorphism keeps.

    An automorphism maps hulls to hulls, so the hull of ``{a, b}`` keeps its
    size and ``c ∈ hull{a, b}`` is preserved.  Survivors get the full check.
    """
    space = perm_space(n)
    size = len(space.ground)
    masks = space.convex.masks
    convex = space.convex.members
    hull = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            pair = 1 << a | 1 << b
            h = (1 << size) - 1
            for c in masks:
                if c & pair == pair:
                    h &= c
            hull[a][b] = h
    hsize = [[bin(h).count("1") for h in row] for row in hull]
    found = set()
    img = [-1] * size
    used = [False] * size

    def consistent(a: int) -> bool:
        fa = img[a]
        for b in range(a):
            fb = img[b]
            if hsize[a][b] != hsize[fa][fb]:
                return False
            for c in range(a + 1):
                inside = hull[b][c] >> a & 1, hull[a][c] >> b & 1, hull[a][b] >> c & 1
                inside_img = (
                    hull[img[b]][img[c]] >> fa & 1,
                    hull[fa][img[c]] >> fb & 1,
                    hull[fa][fb] >> img[c] & 1,
                )
                if inside != inside_img:
                    return False
        return True

    def extend(a: int):
        if a == size:
            # the forward image determines the preimage map; check via the inverse
            inv = [0] * size
            for x, y in enumerate(img):
                inv[y] = x
            if _is_automorphism(tuple(img), convex, masks) and _is_automorphism(tuple(inv), convex, masks):
                found.add(tuple(img))
            return
        for y in range(size):
            if not used[y]:
                img[a] = y
                used[y] = True
                if consistent(a):
                    extend(a + 1)
                used[y] = False
        img[a] = -1

    extend(0)
    return found


def surjective_homs_raw(n: int, m: int, limit: int = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    """Surjective homomorphisms ``S_n -> S_m`` by sweeping every function.

    Functions into ``S_2`` are indexed by the preimage mask of ``12`` and
    swept in bulk with numpy.
    """
    src, dst = perm_space(n), perm_space(m)
    size = len(src.ground)
    if m == 2:
        if 2 ** size > max(limit, 2 ** 24):
            raise SearchSpaceTooLarge(f"2^{size} functions")
        full = (1 << size) - 1
        is_convex = np.zeros(1 << size, dtype=bool)
        is_convex[list(src.convex.masks)] = True
        idx = np.arange(1 << size, dtype=np.int64)
        ok = is_convex & is_convex[full ^ idx]
        ok[0] = ok[full] = False
        # preimage of "12" is the mask; "12" is codomain point 0
        hits = np.flatnonzero(ok)
        return {tuple(0 if int(mask) >> k & 1 else 1 for k in range(size)) for mask in hits}
    out = set()
    for f in all_functions(src.ground, dst.ground, limit):
        if f.is_surjective() and is_tc_hom(f, src, dst):
            out.add(f.assignment)
    return out


def surjective_homs_search(n: int, m: int) -> tuple[set[tuple[int, ...]], int]:
    """Surjective homomorphisms found by choosing preimages of half-spaces.

    A homomorphism pulls ``C_ij`` and its complement ``C_ji`` back to
    convex sets, so each preimage is a convex set with convex complement.
    Choosing one for every ``i < j`` fixes ``f``.  Returns the maps and the
    number of candidate preimages per half-space.
    """
    src, dst = perm_space(n), perm_space(m)
    size = len(src.ground)
    full = (1 << size) - 1
    candidates = [c for c in src.convex.masks if (full ^ c) in src.convex.members]
    pairs = list(combinations(range(1, m + 1), 2))
    # a target permutation is fixed by which C_ij (i < j) contain it
    by_signature = {
        tuple(p[i - 1] < p[j - 1] for i, j in pairs): k for k, p in enumerate(all_perms(m))
    }
    out = set()
    for choice in product(candidates, repeat=len(pairs)):
        assignment = []
        for k in range(size):
            target = by_signature.get(tuple(bool(c >> k & 1) for c in choice))
            if target is None:
                break
            assignment.append(target)
        else:
            f = SpaceMap(src.ground, dst.ground, tuple(assignment))
            if f.is_surjective() and is_tc_hom(f, src, dst):
                out.add(f.assignment)
    return out, len(candidates)


@dataclass
class PermClassification:
    n: int
    m: int
    maps: set[tuple[int, ...]]
    expected: set[tuple[int, ...]]
    method: str

    @property
    def ok(self) -> bool:
        return self.maps == self.expected

    @property
    def count(self) -> int:
        return len(self.maps)


def classify_perm_homs(n: int, m: int, limit: int = DEFAULT_LIMIT) -> PermClassification:
    """Automorphisms when ``n == m``, surjective homomorphisms when ``m < n``."""
    _check_n(n)
    _check_n(m)
    if n == m:
        if n <= 3:
            maps, method = automorphisms_raw(n, limit), "bijection filter"
        elif n == 4:
            maps, method = automorphisms_search(n), "pruned bijection search"
        else:
            raise SearchSpaceTooLarge("automorphism search is limited to n ≤ 4")
        return PermClassification(n, m, maps, expected_automorphisms(n), method)
    if m > n:
        raise OutOfRange("no surjection onto a larger group")
    if m == 2 or n <= 3:
        maps, method = surjective_homs_raw(n, m, limit), "function sweep"
    elif (n, m) == (4, 3):
        maps, method = surjective_homs_search(n, m)[0], "half-space preimage search"
    else:
        raise SearchSpaceTooLarge(f"no feasible search for S_{n} -> S_{m}")
    return PermClassification(n, m, maps, alpha_delta_family(n, m), method)
