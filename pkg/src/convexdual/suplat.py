"""Preconvexity spaces as pointed sup-lattices, and partial sup-lattices.

A partial sup-lattice ``(L, J)`` stores ``J`` as a :class:`SetFamily` of
downsets over the lattice's element ground, so element ``i`` of ``L`` is
bit ``i`` of every member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    AdjointLawFailure,
    GenerationFailure,
    InvalidSpace,
    InvariantFailure,
    NotInfHom,
    SearchSpaceTooLarge,
)
from .lattice import FiniteLattice, LatticeMap, PointedLattice, all_maps, left_adjoint
from .sets import GroundSet, SetFamily, bits_of, next_closure
from .spaces import DEFAULT_LIMIT, PreconvexSpace, SpaceMap, TopConvexSpace, validate_preconvex
from .adjunction import point_closure


@dataclass(frozen=True)
class PartialSupLattice:
    lattice: FiniteLattice
    j: SetFamily

    def __post_init__(self):
        if self.j.ground != self.lattice.ground:
            raise ValueError("J must live on the lattice's element ground")

    @classmethod
    def of(cls, lattice: FiniteLattice, downsets) -> "PartialSupLattice":
        return cls(lattice, SetFamily.of(lattice.ground, downsets))

    def theta(self, d: int) -> int:
        """The partial join, defined exactly on members of ``J``."""
        if d not in self.j.members:
            raise KeyError(f"{self.lattice.ground.fmt(d)} is not in J")
        return self.lattice.join_mask(d)

    def __repr__(self) -> str:
        return f"PartialSupLattice({list(self.lattice.elements)}, J={self.j.to_labels()})"


def preconvex_lattice(p: PreconvexSpace) -> PointedLattice:
    """``F(X, P)``: the preconvex sets with the point closures chosen."""
    report = validate_preconvex(p)
    if not report:
        raise InvalidSpace("; ".join(report.violations))
    fam = p.preconvex
    pos = {m: k for k, m in enumerate(fam.masks)}
    chosen = 0
    for x in range(len(p.ground)):
        chosen |= 1 << pos[point_closure(p, x)]
    pl = PointedLattice(FiniteLattice.from_family(fam), chosen)
    if not pl.is_generating():
        raise InvariantFailure("point closures do not generate the preconvex sets")
    return pl


def g_functor(pl: PointedLattice) -> PreconvexSpace:
    """``G(L, S)``: the space on ``S`` whose preconvex sets are ``↓x ∩ S``.

    A chosen bottom element would leave ``∅`` out of the family, so that is
    rejected as :class:`InvalidSpace`.
    """
    fails = pl.generation_failures()
    if fails:
        raise GenerationFailure(f"not generated at {[pl.lattice.elements[a] for a in fails]}")
    L = pl.lattice
    if pl.chosen >> L.bottom & 1:
        raise InvalidSpace("bottom is chosen, so ∅ is not preconvex")
    idx = pl.chosen_indices()
    ground = GroundSet(tuple(L.elements[i] for i in idx))
    fam = SetFamily(ground, tuple(
        sum(1 << k for k, s in enumerate(idx) if L.leq[s, a]) for a in range(L.n)
    ))
    return PreconvexSpace(ground, fam)


def _roundtrip_space(p: PreconvexSpace) -> bool:
    pl = preconvex_lattice(p)
    q = g_functor(pl)
    fam = p.preconvex
    # element k of q's ground is the k-th chosen preconvex set
    pos = {fam.masks[i]: k for k, i in enumerate(pl.chosen_indices())}
    phi = SpaceMap(p.ground, q.ground, tuple(pos[point_closure(p, x)] for x in range(len(p.ground))))
    if not (phi.is_injective() and phi.is_surjective()):
        return False
    return {phi.preimage(m) for m in q.preconvex.masks} == set(fam.masks)


def _roundtrip_pointed(pl: PointedLattice) -> bool:
    L = pl.lattice
    try:
        q = g_functor(pl)
    except InvalidSpace:
        return False
    back = preconvex_lattice(q)
    fam = q.preconvex
    pos = {m: k for k, m in enumerate(fam.masks)}
    idx = pl.chosen_indices()
    i = [pos[sum(1 << k for k, s in enumerate(idx) if L.leq[s, a])] for a in range(L.n)]
    M = back.lattice
    if len(set(i)) != L.n or M.n != L.n:
        return False
    if any(L.leq[a, b] != M.leq[i[a], i[b]] for a in range(L.n) for b in range(L.n)):
        return False
    return sum(1 << i[s] for s in idx) == back.chosen


def equivalence_roundtrip(obj: PreconvexSpace | PointedLattice) -> bool:
    """``GF(X, P) ≅ (X, P)`` via ``x ↦ cl{x}``, or ``FG(L, S) ≅ (L, S)`` via ``x ↦ ↓x ∩ S``.

    The first map is a bijection only when distinct points have distinct
    closures, so non-T0 preconvexity spaces give ``False``.
    """
    if isinstance(obj, PreconvexSpace):
        return _roundtrip_space(obj)
    return _roundtrip_pointed(obj)


def sup_to_topconvex(l: FiniteLattice) -> TopConvexSpace:
    """Downsets as closed sets and ideals (principal downsets and ∅) as convex sets."""
    g = l.ground
    closed = SetFamily(g, tuple(l.downsets()))
    convex = SetFamily(g, tuple(l.down(a) for a in range(l.n)) + (0,))
    return TopConvexSpace(g, closed, convex)


def j_from_s(pl: PointedLattice, check: bool = False) -> PartialSupLattice:
    """``J = {D downset : ↓(⋁D) ∩ S ⊆ D}``.

    With ``check`` the result is validated and :class:`InvariantFailure`
    raised on any violation.
    """
    L = pl.lattice
    j = [d for d in L.downsets() if L.down(L.join_mask(d)) & pl.chosen & ~d == 0]
    psl = PartialSupLattice(L, SetFamily(L.ground, tuple(j)))
    if check:
        report = validate_partial_sup(psl)
        if not report:
            raise InvariantFailure(str(report.failures()))
    return psl


def s_from_j(psl: PartialSupLattice) -> int:
    """Mask of the totally compact elements."""
    L = psl.lattice
    out = 0
    for a in range(L.n):
        if all(d >> a & 1 for d in psl.j.masks if L.leq[a, L.join_mask(d)]):
            out |= 1 << a
    return out


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_tcg(psl: PartialSupLattice) -> bool:
    """Every element is ``⋁C`` for totally compact ``C`` with ``↓C ∈ J``."""
    L = psl.lattice
    tc = s_from_j(psl)
    for x in range(L.n):
        if not any(
            L.join_mask(c) == x and L.down_closure(c) in psl.j.members
            for c in _subsets(L.down(x) & tc)
        ):
            return False
    return True


@dataclass
class PartialSupReport:
    """Per-condition outcome; each list holds witnesses of failure."""

    downsets: list = field(default_factory=list)
    principal: list = field(default_factory=list)
    intersections: list = field(default_factory=list)
    sandwich: list = field(default_factory=list)
    glueing: list = field(default_factory=list)
    distributive: list = field(default_factory=list)

    def failures(self) -> dict[str, list]:
        return {k: v for k, v in vars(self).items() if v}

    @property
    def ok(self) -> bool:
        return not self.failures()

    def __bool__(self) -> bool:
        return self.ok


def validate_partial_sup(psl: PartialSupLattice) -> PartialSupReport:
    """Check every partial sup-lattice condition plus distributivity.

    Distributivity is read as ``⋀{⋁D : D ∈ 𝒟} = ⋁⋂𝒟`` for all ``𝒟 ⊆ J``.
    """
    L, j = psl.lattice, psl.j
    members, masks = j.members, j.masks
    rep = PartialSupReport()
    rep.downsets = [d for d in masks if not L.is_downset(d)]
    rep.principal = [L.elements[a] for a in range(L.n) if L.down(a) not in members]
    if L.ground.full not in members:
        rep.intersections.append(("empty intersection", L.ground.full))
    for a, b in combinations(masks, 2):
        if a & b not in members:
            rep.intersections.append((a, b))
    downsets = L.downsets()
    for a in masks:
        top = L.down(L.join_mask(a))
        for b in downsets:
            if a & ~b == 0 and b & ~top == 0 and b not in members:
                rep.sandwich.append((a, b))
    rep.glueing = _glueing_failures(psl)
    # reachable (⋂𝒟, ⋀{⋁D}) pairs, grown one member at a time
    pairs = {(L.ground.full, L.top)}
    frontier = list(pairs)
    sups = [(d, L.join_mask(d)) for d in masks]
    while frontier:
        inter, m = frontier.pop()
        for d, s in sups:
            nxt = (inter & d, L.meet(m, s))
            if nxt not in pairs:
                pairs.add(nxt)
                frontier.append(nxt)
    rep.distributive = sorted((i, m) for i, m in pairs if L.join_mask(i) != m)
    return rep


def _glueing_failures(psl: PartialSupLattice) -> list:
    """Down-closed ``𝒜 ⊆ J`` and ``Y ∈ J`` breaking the fourth condition."""
    L, masks = psl.lattice, psl.j.masks
    n = len(masks)
    sups = [L.join_mask(d) for d in masks]
    below = [sum(1 << k for k in range(n) if masks[k] & ~masks[i] == 0) for i in range(n)]

    def close(sel: int) -> int:
        out = 0
        for i in bits_of(sel):
            out |= below[i]
        return out

    out = []
    for sel in next_closure(close, n):
        union = 0
        reach = 0
        for i in bits_of(sel):
            union |= masks[i]
            reach |= L.down(sups[i])
        for y, sy in zip(masks, sups):
            if y & ~reach:
                continue
            if not any(b & ~union == 0 and L.leq[sy, sb] for b, sb in zip(masks, sups)):
                out.append((sel, y))
    return out


def is_partial_sup_hom(f: LatticeMap, src: PartialSupLattice, dst: PartialSupLattice) -> bool:
    """Inf-preserving ``f`` with ``↓f(A) ∈ K`` and ``⋁↓f(A) = f(⋁A)`` for all ``A ∈ J``."""
    if f.dom != src.lattice or f.cod != dst.lattice:
        raise ValueError("map does not run between the given lattices")
    if not f.preserves_meets():
        raise NotInfHom(repr(f))
    return not partial_sup_hom_failures(f, src, dst)


def partial_sup_hom_failures(f: LatticeMap, src: PartialSupLattice, dst: PartialSupLattice) -> list[int]:
    """Members ``A`` of ``J`` where the homomorphism conditions fail."""
    L, M = src.lattice, dst.lattice
    out = []
    for a in src.j.masks:
        img = M.down_closure(f.image_mask(a))
        if img not in dst.j.members or M.join_mask(img) != f(L.join_mask(a)):
            out.append(a)
    return out


def hom_equivalence_check(src: PartialSupLattice, dst: PartialSupLattice, limit: int = DEFAULT_LIMIT) -> bool:
    """For every inf-preserving ``f``: partial sup-hom iff ``f*`` keeps totally compact elements."""
    L, M = src.lattice, dst.lattice
    if M.n ** L.n > limit:
        raise SearchSpaceTooLarge(f"{M.n}^{L.n} maps exceeds limit {limit}")
    tc_src, tc_dst = s_from_j(src), s_from_j(dst)
    for f in all_maps(L, M):
        if not f.is_monotone() or not f.preserves_meets():
            continue
        try:
            fstar = left_adjoint(f)
        except AdjointLawFailure:
            return False
        keeps = all(tc_src >> fstar(a) & 1 for a in bits_of(tc_dst))
        if keeps != is_partial_sup_hom(f, src, dst):
            return False
    return True


def pullback_chosen(f: LatticeMap, target: PointedLattice) -> int:
    """``f⁻¹(T)`` for a sup-hom ``f: L -> M``; the chosen set of the cartesian lift."""
    return f.preimage_mask(target.chosen)


def is_pointed_sup_morphism(f: LatticeMap, src: PointedLattice, dst: PointedLattice) -> bool:
    """Sup-homomorphism sending chosen elements to chosen elements."""
    return f.preserves_joins() and all(dst.chosen >> f(s) & 1 for s in bits_of(src.chosen))
