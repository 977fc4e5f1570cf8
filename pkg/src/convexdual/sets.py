"""Bit-packed subsets and set families over a finite ground set.

Every subset is an ``int`` mask; bit ``i`` is the element at position ``i``
of the ground.  A :class:`SetFamily` keeps its masks deduplicated and
sorted by mask value, so two families are equal exactly when they hold the
same sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import GroundTooLarge, NotClosureSystem

# Python ints are unbounded; the cap only keeps desk-scale checks honest.
# S_5 (120 permutations) is the largest ground any generator builds.
MAX_GROUND = 128


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in ground set: {labels}")
        if len(labels) > MAX_GROUND:
            raise GroundTooLarge(f"ground of size {len(labels)} exceeds {MAX_GROUND}")

    @classmethod
    def range(cls, n: int) -> "GroundSet":
        return cls(tuple(str(i) for i in range(n)))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask(self, labels: Iterable) -> int:
        """Mask of a collection of labels (ints are looked up by their string form)."""
        m = 0
        for x in labels:
            try:
                m |= 1 << self.index[str(x)]
            except KeyError:
                raise KeyError(f"{x!r} is not an element of {self.labels}") from None
        return m

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits_of(mask)]

    def subset(self, labels: Iterable) -> "Subset":
        return Subset(self, self.mask(labels))

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"


@dataclass(frozen=True)
class Subset:
    ground: GroundSet
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits & ~self.ground.full:
            raise ValueError(f"mask {self.bits:#x} references elements outside the ground")

    def __contains__(self, label) -> bool:
        i = self.ground.index.get(str(label))
        return i is not None and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ground.names(self.bits))

    def __len__(self) -> int:
        return popcount(self.bits)

    def __le__(self, other: "Subset") -> bool:
        return self.bits & ~other.bits == 0

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.ground, self.bits | other.bits)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.ground, self.bits & other.bits)

    def __repr__(self) -> str:
        return self.ground.fmt(self.bits)


def _as_mask(ground: GroundSet, a) -> int:
    if isinstance(a, Subset):
        if a.ground != ground:
            raise ValueError("subset belongs to a different ground")
        return a.bits
    if isinstance(a, int):
        return a
    return ground.mask(a)


@dataclass(frozen=True, eq=False)
class SetFamily:
    """A deduplicated family of subsets, stored in ascending mask order."""

    ground: GroundSet
    masks: tuple[int, ...] = field(default=())

    def __post_init__(self):
        full = self.ground.full
        masks = tuple(sorted(set(self.masks)))
        for m in masks:
            if m < 0 or m & ~full:
                raise ValueError(f"mask {m:#x} references elements outside the ground")
        object.__setattr__(self, "masks", masks)

    @classmethod
    def of(cls, ground: GroundSet, sets: Iterable) -> "SetFamily":
        """Build from masks, :class:`Subset` values or iterables of labels."""
        return cls(ground, tuple(_as_mask(ground, s) for s in sets))

    @classmethod
    def power_set(cls, ground: GroundSet) -> "SetFamily":
        return PowerSet(ground)

    @classmethod
    def trivial(cls, ground: GroundSet) -> "SetFamily":
        """The indiscrete family {∅, X}."""
        return cls(ground, (0, ground.full))

    @property
    def is_power_set(self) -> bool:
        return len(self.masks) == 1 << len(self.ground)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.masks)

    def __contains__(self, a) -> bool:
        return _as_mask(self.ground, a) in self.members

    def __iter__(self) -> Iterator[Subset]:
        return (Subset(self.ground, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily) or other.ground != self.ground:
            return NotImplemented if not isinstance(other, SetFamily) else False
        if isinstance(self, PowerSet) or isinstance(other, PowerSet):
            return self.is_power_set and other.is_power_set
        return self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.ground, len(self)))

    def __repr__(self) -> str:
        body = ", ".join(self.ground.fmt(m) for m in self.masks)
        return f"SetFamily[{body}]"

    def _check(self, other: "SetFamily"):
        if other.ground != self.ground:
            raise ValueError("families live on different grounds")

    def __and__(self, other: "SetFamily") -> "SetFamily":
        self._check(other)
        if isinstance(other, PowerSet):
            return self
        return SetFamily(self.ground, tuple(self.members & other.members))

    def __or__(self, other: "SetFamily") -> "SetFamily":
        self._check(other)
        if isinstance(other, PowerSet):
            return other
        return SetFamily(self.ground, self.masks + other.masks)

    def __le__(self, other: "SetFamily") -> bool:
        self._check(other)
        if isinstance(other, PowerSet):
            return True
        return self.members <= other.members

    def with_sets(self, *sets) -> "SetFamily":
        return SetFamily(self.ground, self.masks + tuple(_as_mask(self.ground, s) for s in sets))

    def to_labels(self) -> list[list[str]]:
        return [self.ground.names(m) for m in self.masks]


class _AllMasks:
    __slots__ = ("full",)

    def __init__(self, full: int):
        self.full = full

    def __contains__(self, m) -> bool:
        return isinstance(m, int) and m >= 0 and m & ~self.full == 0


class PowerSet(SetFamily):
    """Every subset of the ground, without materializing the masks.

    ``masks`` is built on first access, so only touch it on small grounds.
    """

    def __init__(self, ground: GroundSet):
        object.__setattr__(self, "ground", ground)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(range(1 << len(self.ground)))

    @property
    def is_power_set(self) -> bool:
        return True

    @property
    def members(self) -> _AllMasks:
        return _AllMasks(self.ground.full)

    def __iter__(self) -> Iterator[Subset]:
        return (Subset(self.ground, m) for m in range(1 << len(self.ground)))

    def __len__(self) -> int:
        return 1 << len(self.ground)

    def __repr__(self) -> str:
        return f"PowerSet({self.ground.fmt(self.ground.full)})"

    def __and__(self, other: SetFamily) -> SetFamily:
        self._check(other)
        return other

    def __or__(self, other: SetFamily) -> SetFamily:
        self._check(other)
        return self

    def __le__(self, other: SetFamily) -> bool:
        self._check(other)
        return other.is_power_set

    def with_sets(self, *sets) -> SetFamily:
        return self


def _fixpoint(seed: Iterable[int], op: Callable[[int, int], int]) -> tuple[int, ...]:
    found = set(seed)
    todo = list(found)
    while todo:
        a = todo.pop()
        for b in list(found):
            c = op(a, b)
            if c not in found:
                found.add(c)
                todo.append(c)
    return tuple(found)


def intersection_closure(fam: SetFamily) -> SetFamily:
    """Smallest family containing ``fam`` and closed under all intersections.

    The empty intersection contributes the whole ground.
    """
    if isinstance(fam, PowerSet):
        return fam
    return SetFamily(fam.ground, _fixpoint(fam.masks + (fam.ground.full,), int.__and__))


def finite_union_closure(fam: SetFamily) -> SetFamily:
    """Smallest family containing ``fam`` closed under finite unions (∅ included)."""
    if isinstance(fam, PowerSet):
        return fam
    return SetFamily(fam.ground, _fixpoint(fam.masks + (0,), int.__or__))


def directed_union_closure(fam: SetFamily) -> SetFamily:
    """Closure under directed unions.

    A nonempty directed subfamily of a finite family has a largest member,
    so the only new union is the empty one.
    """
    return fam.with_sets(0)


def overline_closure(fam: SetFamily) -> SetFamily:
    """Closure under finite unions and arbitrary intersections."""
    return intersection_closure(finite_union_closure(fam))


def hull(fam: SetFamily, a) -> Subset:
    """Intersection of all members of ``fam`` containing ``a``."""
    m = _as_mask(fam.ground, a)
    if isinstance(fam, PowerSet):
        return Subset(fam.ground, m)
    if fam.ground.full not in fam.members:
        raise NotClosureSystem("family does not contain the whole ground")
    masks = fam.masks
    members = fam.members
    for i, x in enumerate(masks):
        for y in masks[i + 1:]:
            if x & y not in members:
                raise NotClosureSystem(
                    f"{fam.ground.fmt(x)} ∩ {fam.ground.fmt(y)} is missing"
                )
    out = fam.ground.full
    for c in masks:
        if m & ~c == 0:
            out &= c
    return Subset(fam.ground, out)


@dataclass(frozen=True)
class ClosureReport:
    has_top: bool
    has_bottom: bool
    intersection_closed: bool
    union_closed: bool
    directed_closed: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


def _pairwise_closed(masks: Sequence[int], members, op) -> bool:
    return all(op(a, b) in members for a, b in combinations(masks, 2))


def is_closure_system(fam: SetFamily) -> ClosureReport:
    """Report which closure properties ``fam`` has (pairwise checks)."""
    has_bottom = 0 in fam.members
    if isinstance(fam, PowerSet):
        return ClosureReport(True, True, True, True, True)
    return ClosureReport(
        has_top=fam.ground.full in fam.members,
        has_bottom=has_bottom,
        intersection_closed=_pairwise_closed(fam.masks, fam.members, int.__and__),
        union_closed=_pairwise_closed(fam.masks, fam.members, int.__or__),
        # nonempty directed subfamilies have a maximum; the empty one unions to ∅
        directed_closed=has_bottom,
    )


def next_closure(closure: Callable[[int], int], n: int) -> Iterator[int]:
    """Enumerate every closed set of a closure operator on ``n`` points.

    Ganter's NextClosure, yielding closed sets in lectic order.  ``closure``
    maps a mask to its closure.
    """
    a = closure(0)
    full = (1 << n) - 1
    while True:
        yield a
        if a == full:
            return
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                continue
            below = bit - 1
            b = closure((a & below) | bit)
            if (b & ~a) & below == 0:
                a = b
                break
        else:
            return
