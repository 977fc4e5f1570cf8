"""The closed-convex functor, its right adjoint, and their fixed points.

``cc`` sends a topological convexity space to its closed convex sets;
``is_functor`` sends a preconvexity space back to the space whose closed
sets are generated by finite unions and intersections and whose convex
sets are generated by directed unions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpace, NotPreconvex
from .sets import GroundSet, SetFamily, Subset, bits_of, directed_union_closure, overline_closure
from .spaces import (
    DEFAULT_LIMIT,
    PreconvexSpace,
    SpaceMap,
    TopConvexSpace,
    all_functions,
    is_pre_hom,
    is_tc_hom,
    validate_preconvex,
    validate_topconvex,
)


def _require_valid(report):
    if not report:
        raise InvalidSpace("; ".join(report.violations))


def cc(s: TopConvexSpace) -> PreconvexSpace:
    """Preconvexity space of closed convex sets."""
    _require_valid(validate_topconvex(s))
    return PreconvexSpace(s.ground, s.closed & s.convex)


def is_functor(p: PreconvexSpace) -> TopConvexSpace:
    """Right adjoint of :func:`cc`."""
    _require_valid(validate_preconvex(p))
    return TopConvexSpace(p.ground, overline_closure(p.preconvex), directed_union_closure(p.preconvex))


def adjunction_failures(x: TopConvexSpace, p: PreconvexSpace, limit: int = DEFAULT_LIMIT) -> list[SpaceMap]:
    """Functions on which the two hom-set memberships disagree."""
    isp = is_functor(p)
    ccx = cc(x)
    return [
        f for f in all_functions(x.ground, p.ground, limit)
        if is_tc_hom(f, x, isp) != is_pre_hom(f, ccx, p)
    ]


def check_adjunction(x: TopConvexSpace, p: PreconvexSpace, limit: int = DEFAULT_LIMIT) -> bool:
    """Hom-set equality ``hom(x, IS p) = hom(CC x, p)`` over every function."""
    return not adjunction_failures(x, p, limit)


def check_idempotent(x: TopConvexSpace) -> bool:
    once = cc(x)
    return cc(is_functor(once)) == once


@dataclass
class TeetotalReport:
    """Outcome of the two teetotal conditions.

    ``convex_witness`` is a convex set that is not closed; ``closed_witness``
    is a closed set ``V`` and a point outside it that no finite union of
    closed convex sets can separate from ``V``.
    """

    convex_ok: bool
    closed_ok: bool
    convex_witness: int | None = None
    closed_witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.convex_ok and self.closed_ok


def teetotal_report(x: TopConvexSpace) -> TeetotalReport:
    _require_valid(validate_topconvex(x))
    cc_sets = (x.closed & x.convex).masks
    # directed unions of a finite family are its members plus the empty union
    convex_witness = next((c for c in x.convex.masks if c and c not in x.closed.members), None)
    closed_witness = None
    for pt in range(len(x.ground)):
        # the largest finite union of closed convex sets avoiding pt
        cover = 0
        for c in cc_sets:
            if not c >> pt & 1:
                cover |= c
        bad = next(
            (v for v in x.closed.masks if not v >> pt & 1 and v & ~cover),
            None,
        )
        if bad is not None:
            closed_witness = (bad, pt)
            break
    return TeetotalReport(convex_witness is None, closed_witness is None, convex_witness, closed_witness)


def is_teetotal(x: TopConvexSpace) -> bool:
    return bool(teetotal_report(x))


def is_geometric(p: PreconvexSpace) -> bool:
    fam = p.preconvex
    return overline_closure(fam) & directed_union_closure(fam) == fam


def point_closure(p: PreconvexSpace, i: int) -> int:
    """Smallest preconvex set containing element ``i``."""
    out = p.ground.full
    for m in p.preconvex.masks:
        if m >> i & 1:
            out &= m
    return out


def geometric_embedding(p: PreconvexSpace) -> tuple[PreconvexSpace, SpaceMap]:
    """Embed ``p`` into a geometric space on the points ``Y = P``.

    The family on ``Y`` holds, for each preconvex ``R``, the preconvex sets
    inside ``R``, plus the empty set so the result is a preconvexity space.
    Each point goes to its closure.
    """
    _require_valid(validate_preconvex(p))
    masks = p.preconvex.masks
    y = GroundSet(tuple(p.ground.fmt(m) for m in masks))
    pos = {m: k for k, m in enumerate(masks)}
    below = [sum(1 << pos[s] for s in masks if s & ~r == 0) for r in masks]
    q = PreconvexSpace(y, SetFamily(y, tuple(below) + (0,)))
    i = SpaceMap(p.ground, y, tuple(pos[point_closure(p, x)] for x in range(len(p.ground))))
    return q, i


def is_embedding(i: SpaceMap, p: PreconvexSpace, q: PreconvexSpace) -> bool:
    """``A ∈ P`` exactly when ``A`` is the preimage of some member of ``Q``."""
    return {i.preimage(b) for b in q.preconvex.masks} == set(p.preconvex.masks)


def restrict(p: PreconvexSpace, a) -> PreconvexSpace:
    """Trace of ``p`` on a preconvex subset ``a``."""
    mask = a.bits if isinstance(a, Subset) else (a if isinstance(a, int) else p.ground.mask(a))
    if mask not in p.preconvex.members:
        raise NotPreconvex(f"{p.ground.fmt(mask)} is not preconvex")
    idx = list(bits_of(mask))
    ground = GroundSet(tuple(p.ground.labels[i] for i in idx))

    def reindex(m: int) -> int:
        return sum(1 << k for k, i in enumerate(idx) if m >> i & 1)

    return PreconvexSpace(ground, SetFamily(ground, tuple(reindex(m & mask) for m in p.preconvex.masks)))
