"""Stone duality between finite T0 spaces and pointed coframes.

A topology here is the ``closed`` family of a :class:`TopConvexSpace`; the
convex family is ignored.  The lattice of closed sets is built with
:meth:`FiniteLattice.from_family`, so element ``i`` of that lattice is the
closed set ``closed.masks[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenerationFailure, InvalidSpace, NotCoframeHom, NotT0
from .lattice import FiniteLattice, LatticeMap, PointedLattice, left_adjoint
from .sets import GroundSet, PowerSet, SetFamily, bits_of
from .spaces import SpaceMap, TopConvexSpace


def _closed_family(x: TopConvexSpace | SetFamily) -> SetFamily:
    fam = x.closed if isinstance(x, TopConvexSpace) else x
    if isinstance(fam, PowerSet):
        return fam
    full, members = fam.ground.full, fam.members
    if 0 not in members or full not in members:
        raise InvalidSpace("closed sets must include ∅ and X")
    for a in fam.masks:
        for b in fam.masks:
            if a | b not in members or a & b not in members:
                raise InvalidSpace("closed sets must be closed under ∪ and ∩")
    return fam


def closed_coframe(x: TopConvexSpace | SetFamily) -> FiniteLattice:
    """Closed sets ordered by inclusion."""
    return FiniteLattice.from_family(_closed_family(x))


def point_closures(x: TopConvexSpace | SetFamily) -> list[int]:
    fam = _closed_family(x)
    out = []
    for i in range(len(fam.ground)):
        c = fam.ground.full
        for m in fam.masks:
            if m >> i & 1:
                c &= m
        out.append(c)
    return out


def is_t0(x: TopConvexSpace | SetFamily) -> bool:
    cl = point_closures(x)
    return len(set(cl)) == len(cl)


def lattice_points(l: FiniteLattice) -> int:
    """Mask of the non-bottom elements that are not a join of two strictly smaller ones."""
    out = 0
    for p in range(l.n):
        if p == l.bottom:
            continue
        below = [b for b in range(l.n) if b != p and l.leq[b, p]]
        if all(l.join(b, c) != p for b in below for c in below):
            out |= 1 << p
    return out


def pointed_from_space(x: TopConvexSpace | SetFamily) -> PointedLattice:
    """The pointed coframe of closed sets with the point closures chosen."""
    fam = _closed_family(x)
    lat = FiniteLattice.from_family(fam)
    pos = {m: k for k, m in enumerate(fam.masks)}
    chosen = 0
    for c in point_closures(fam):
        chosen |= 1 << pos[c]
    return PointedLattice(lat, chosen)


def space_from_pointed(pl: PointedLattice) -> TopConvexSpace:
    """Space on the chosen elements whose closed sets are ``↓a ∩ S``."""
    fails = pl.generation_failures()
    if fails:
        raise GenerationFailure(f"not generated at {[pl.lattice.elements[a] for a in fails]}")
    L = pl.lattice
    idx = pl.chosen_indices()
    ground = GroundSet(tuple(L.elements[i] for i in idx))
    closed = SetFamily(ground, tuple(
        sum(1 << k for k, s in enumerate(idx) if L.leq[s, a]) for a in range(L.n)
    ))
    return TopConvexSpace.from_topology(closed)


def check_pointed_morphism(g: LatticeMap, src: PointedLattice, dst: PointedLattice, strict: bool = True) -> bool:
    """Whether ``g: (M, T) -> (L, S)`` satisfies ``⋀{m : s ≤ g(m)} ∈ T`` for every chosen ``s``.

    With ``strict`` the map must be a coframe homomorphism, otherwise
    :class:`NotCoframeHom` is raised.
    """
    if g.dom != src.lattice or g.cod != dst.lattice:
        raise ValueError("map does not run between the given lattices")
    if strict and not g.is_coframe_hom():
        raise NotCoframeHom(repr(g))
    M, L = g.dom, g.cod
    for s in bits_of(dst.chosen):
        m = M.meet_all(x for x in range(M.n) if L.leq[s, g(x)])
        if not src.chosen >> m & 1:
            return False
    return True


def inverse_image_map(f: SpaceMap, x: TopConvexSpace, y: TopConvexSpace) -> LatticeMap:
    """The coframe map ``C(y) -> C(x)`` taking a closed set to its preimage."""
    fx, fy = _closed_family(x), _closed_family(y)
    pos = {m: k for k, m in enumerate(fx.masks)}
    try:
        assignment = tuple(pos[f.preimage(m)] for m in fy.masks)
    except KeyError:
        raise InvalidSpace(f"{f!r} is not continuous") from None
    return LatticeMap(FiniteLattice.from_family(fy), FiniteLattice.from_family(fx), assignment)


def map_from_pointed_morphism(g: LatticeMap, src: PointedLattice, dst: PointedLattice) -> SpaceMap:
    """The continuous map ``T(dst) -> T(src)``, ``s ↦ g*(s)``."""
    if not check_pointed_morphism(g, src, dst):
        raise ValueError("not a pointed morphism")
    gstar = left_adjoint(g)
    dom_idx, cod_idx = dst.chosen_indices(), src.chosen_indices()
    pos = {c: k for k, c in enumerate(cod_idx)}
    dom = GroundSet(tuple(dst.lattice.elements[i] for i in dom_idx))
    cod = GroundSet(tuple(src.lattice.elements[i] for i in cod_idx))
    return SpaceMap(dom, cod, tuple(pos[gstar(s)] for s in dom_idx))


def stone_roundtrip_space(x: TopConvexSpace) -> bool:
    """``T(C(x)) ≅ x`` through ``x ↦ cl{x}``."""
    fam = _closed_family(x)
    if not is_t0(fam):
        raise NotT0("two points share a closure")
    pl = pointed_from_space(fam)
    y = space_from_pointed(pl)
    # element k of y's ground is the k-th chosen closed set
    chosen = [fam.masks[i] for i in pl.chosen_indices()]
    pos = {c: k for k, c in enumerate(chosen)}
    phi = SpaceMap(fam.ground, y.ground, tuple(pos[c] for c in point_closures(fam)))
    if not (phi.is_injective() and phi.is_surjective()):
        return False
    return {phi.preimage(m) for m in y.closed.masks} == set(fam.masks)


def stone_roundtrip_lattice(pl: PointedLattice) -> bool:
    """``C(T(L, S)) ≅ (L, S)`` through ``a ↦ ↓a ∩ S``."""
    L = pl.lattice
    y = space_from_pointed(pl)
    back = pointed_from_space(y)
    M = back.lattice
    fam = y.closed
    pos = {m: k for k, m in enumerate(fam.masks)}
    idx = pl.chosen_indices()
    i = [pos[sum(1 << k for k, s in enumerate(idx) if L.leq[s, a])] for a in range(L.n)]
    if len(set(i)) != L.n or M.n != L.n:
        return False
    if any(L.leq[a, b] != M.leq[i[a], i[b]] for a in range(L.n) for b in range(L.n)):
        return False
    return sum(1 << i[s] for s in idx) == back.chosen


def cocartesian_lift(f: LatticeMap, src: PointedLattice) -> PointedLattice:
    """Chosen set ``(f*)⁻¹(T)`` on the codomain of a coframe map ``f: M -> L``."""
    if f.dom != src.lattice:
        raise ValueError("map does not start at the pointed lattice")
    if not f.is_coframe_hom():
        raise NotCoframeHom(repr(f))
    fstar = left_adjoint(f)
    chosen = sum(1 << s for s in range(f.cod.n) if src.chosen >> fstar(s) & 1)
    return PointedLattice(f.cod, chosen)


@dataclass(frozen=True)
class SeparationFlags:
    t0: bool
    td: bool
    sober: bool


def separation_flags(x: TopConvexSpace | SetFamily) -> SeparationFlags:
    fam = _closed_family(x)
    cl = point_closures(fam)
    t0 = len(set(cl)) == len(cl)
    td = all((c & ~(1 << i)) in fam.members for i, c in enumerate(cl))
    pos = {m: k for k, m in enumerate(fam.masks)}
    closures = sum(1 << pos[c] for c in cl)
    sober = t0 and closures == lattice_points(FiniteLattice.from_family(fam))
    return SeparationFlags(t0, td, sober)


@dataclass(frozen=True)
class FibreBounds:
    top_points: int
    bottom_points: int
    bottom_valid: bool


def coframe_fibre_bounds(l: FiniteLattice) -> FibreBounds:
    """Largest and smallest chosen sets over ``l``, as element masks."""
    top = lattice_points(l)
    bottom = 0
    for p in bits_of(top):
        strictly_below = [q for q in range(l.n) if q != p and l.leq[q, p]]
        if l.join_all(strictly_below) != p:
            bottom |= 1 << p
    return FibreBounds(top, bottom, PointedLattice(l, bottom).is_generating())
