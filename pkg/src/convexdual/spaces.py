"""Topological convexity spaces, preconvexity spaces and their homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterator, Literal

from .errors import GroundMismatch, InvalidSpace, SearchSpaceTooLarge
from .sets import GroundSet, PowerSet, SetFamily, bits_of

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class TopConvexSpace:
    """A ground set with closed sets ``closed`` and convex sets ``convex``."""

    ground: GroundSet
    closed: SetFamily
    convex: SetFamily

    def __post_init__(self):
        if self.closed.ground != self.ground or self.convex.ground != self.ground:
            raise GroundMismatch("families must live on the space's ground")

    @classmethod
    def discrete(cls, ground: GroundSet) -> "TopConvexSpace":
        ps = SetFamily.power_set(ground)
        return cls(ground, ps, ps)

    @classmethod
    def from_topology(cls, closed: SetFamily) -> "TopConvexSpace":
        """Topology-only carrier: every subset is convex."""
        return cls(closed.ground, closed, SetFamily.power_set(closed.ground))


@dataclass(frozen=True)
class PreconvexSpace:
    ground: GroundSet
    preconvex: SetFamily

    def __post_init__(self):
        if self.preconvex.ground != self.ground:
            raise GroundMismatch("family must live on the space's ground")


@dataclass(frozen=True)
class SpaceMap:
    """A total function between two ground sets, by index."""

    dom: GroundSet
    cod: GroundSet
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(x) for x in self.assignment))
        if len(self.assignment) != len(self.dom):
            raise ValueError("assignment must cover every domain element")
        if any(not 0 <= y < len(self.cod) for y in self.assignment):
            raise ValueError("assignment references an element outside the codomain")

    @classmethod
    def from_labels(cls, dom: GroundSet, cod: GroundSet, mapping: dict) -> "SpaceMap":
        return cls(dom, cod, tuple(cod.index[str(mapping[x])] for x in dom.labels))

    @classmethod
    def identity(cls, ground: GroundSet) -> "SpaceMap":
        return cls(ground, ground, tuple(range(len(ground))))

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.dom.labels[i]}->{self.cod.labels[j]}" for i, j in enumerate(self.assignment)
        )
        return f"SpaceMap({body})"

    def as_labels(self) -> dict[str, str]:
        return {self.dom.labels[i]: self.cod.labels[j] for i, j in enumerate(self.assignment)}

    @cached_property
    def fibres(self) -> tuple[int, ...]:
        out = [0] * len(self.cod)
        for i, j in enumerate(self.assignment):
            out[j] |= 1 << i
        return tuple(out)

    def preimage(self, mask: int) -> int:
        out = 0
        fib = self.fibres
        for j in bits_of(mask):
            out |= fib[j]
        return out

    def image(self, mask: int) -> int:
        out = 0
        for i in bits_of(mask):
            out |= 1 << self.assignment[i]
        return out

    def then(self, g: "SpaceMap") -> "SpaceMap":
        """Composite ``g ∘ self``."""
        if g.dom != self.cod:
            raise GroundMismatch("maps do not compose")
        return SpaceMap(self.dom, g.cod, tuple(g(j) for j in self.assignment))

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_surjective(self) -> bool:
        return set(self.assignment) == set(range(len(self.cod)))


@dataclass
class ValidationReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _family_violations(name: str, fam: SetFamily, unions: bool) -> list[str]:
    if isinstance(fam, PowerSet):
        return []
    g = fam.ground
    out = []
    if g.full not in fam.members:
        out.append(f"{name}: missing X (empty intersection)")
    if 0 not in fam.members:
        out.append(f"{name}: missing ∅ (empty union)")
    for a, b in combinations(fam.masks, 2):
        if a & b not in fam.members:
            out.append(f"{name}: {g.fmt(a)} ∩ {g.fmt(b)} = {g.fmt(a & b)} missing")
        if unions and a | b not in fam.members:
            out.append(f"{name}: {g.fmt(a)} ∪ {g.fmt(b)} = {g.fmt(a | b)} missing")
    return out


def validate_topconvex(s: TopConvexSpace) -> ValidationReport:
    """List every violated closure condition; empty iff ``s`` is valid.

    Closure of the convex sets under nonempty directed unions is automatic
    for finite grounds, so it is not listed separately.
    """
    return ValidationReport(
        _family_violations("closed", s.closed, unions=True)
        + _family_violations("convex", s.convex, unions=False)
    )


def validate_preconvex(p: PreconvexSpace) -> ValidationReport:
    return ValidationReport(_family_violations("preconvex", p.preconvex, unions=False))


def _check_grounds(f: SpaceMap, src_ground: GroundSet, dst_ground: GroundSet):
    if f.dom != src_ground or f.cod != dst_ground:
        raise GroundMismatch(f"{f!r} does not run between the given grounds")


def _pulls_back(f: SpaceMap, target: SetFamily, source: SetFamily) -> bool:
    if isinstance(source, PowerSet):
        return True
    members = source.members
    return all(f.preimage(m) in members for m in target.masks)


def is_tc_hom(f: SpaceMap, src: TopConvexSpace, dst: TopConvexSpace) -> bool:
    """Closed sets pull back to closed sets and convex sets to convex sets."""
    _check_grounds(f, src.ground, dst.ground)
    return _pulls_back(f, dst.closed, src.closed) and _pulls_back(f, dst.convex, src.convex)


def is_pre_hom(f: SpaceMap, src: PreconvexSpace, dst: PreconvexSpace) -> bool:
    _check_grounds(f, src.ground, dst.ground)
    return _pulls_back(f, dst.preconvex, src.preconvex)


def all_functions(dom: GroundSet, cod: GroundSet, limit: int = DEFAULT_LIMIT) -> Iterator[SpaceMap]:
    """Every total function ``dom -> cod``, lexicographic on the assignment."""
    count = len(cod) ** len(dom)
    if count > limit:
        raise SearchSpaceTooLarge(f"{len(cod)}^{len(dom)} = {count} functions exceeds limit {limit}")
    for assignment in product(range(len(cod)), repeat=len(dom)):
        yield SpaceMap(dom, cod, assignment)


def enumerate_homs(
    src: TopConvexSpace | PreconvexSpace,
    dst: TopConvexSpace | PreconvexSpace,
    category: Literal["tc", "pre"] = "tc",
    limit: int = DEFAULT_LIMIT,
) -> list[SpaceMap]:
    """All homomorphisms ``src -> dst`` in the chosen category, in lexicographic order."""
    if category == "tc":
        check = is_tc_hom
    elif category == "pre":
        check = is_pre_hom
    else:
        raise ValueError(f"unknown category {category!r}")
    return [f for f in all_functions(src.ground, dst.ground, limit) if check(f, src, dst)]


def disconnection(s: TopConvexSpace, a: int) -> tuple[int, int] | None:
    """Closed ``(F1, F2)`` splitting ``a`` into two nonempty disjoint pieces, if any."""
    if isinstance(s.closed, PowerSet):
        low = a & -a
        return (low, a ^ low) if a ^ low else None
    closed = s.closed.masks
    for i, f1 in enumerate(closed):
        p1 = a & f1
        if not p1:
            continue
        for f2 in closed[i:]:
            p2 = a & f2
            if p2 and (p1 | p2) == a and not (p1 & p2):
                return f1, f2
    return None


def is_compatible(s: TopConvexSpace) -> bool:
    """Every convex set is connected.

    The second compatibility condition (hulls of compact sets are compact)
    holds vacuously on a finite space.
    """
    report = validate_topconvex(s)
    if not report:
        raise InvalidSpace("; ".join(report.violations))
    return all(disconnection(s, c) is None for c in s.convex.masks)


def disconnected_convex_sets(s: TopConvexSpace) -> list[tuple[int, int, int]]:
    """Every convex set that fails connectedness, with a splitting pair."""
    out = []
    for c in s.convex.masks:
        w = disconnection(s, c)
        if w is not None:
            out.append((c, *w))
    return out

