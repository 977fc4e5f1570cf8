"""Finite lattices, pointed lattices and maps between them.

Elements are referred to by index; ``leq[i, j]`` is true iff element ``i``
is below element ``j``.  Sets of elements (downsets, chosen sets) are int
masks over the element indices, so they plug straight into
:mod:`convexdual.sets`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AdjointLawFailure, InvalidLattice, NotMonotone
from .sets import GroundSet, SetFamily, bits_of, next_closure


class FiniteLattice:
    """A finite lattice given by its order matrix.

    Validated on construction: the relation must be a partial order in
    which every pair has a join and a meet.
    """

    def __init__(self, elements: Sequence, leq):
        self.elements = tuple(str(e) for e in elements)
        leq = np.array(leq, dtype=bool)
        n = len(self.elements)
        if leq.shape != (n, n):
            raise InvalidLattice(f"order matrix has shape {leq.shape}, expected {(n, n)}")
        if n == 0:
            raise InvalidLattice("a lattice needs at least one element")
        if len(set(self.elements)) != n:
            raise InvalidLattice("duplicate element labels")
        if not leq.diagonal().all():
            raise InvalidLattice("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise InvalidLattice("order is not antisymmetric")
        li = leq.astype(np.int64)
        if ((li @ li > 0) & ~leq).any():
            raise InvalidLattice("order is not transitive")
        leq.flags.writeable = False
        self.leq = leq
        self.n = n
        self.join_table = self._bound_table(leq)
        self.meet_table = self._bound_table(leq.T)
        self.bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(leq.all(axis=0))[0])

    def _bound_table(self, leq: np.ndarray) -> np.ndarray:
        n = self.n
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a, n):
                ub = np.flatnonzero(leq[a] & leq[b])
                least = [u for u in ub if leq[u, ub].all()]
                if not least:
                    x, y = self.elements[a], self.elements[b]
                    raise InvalidLattice(f"{x} and {y} have no least common bound")
                table[a, b] = table[b, a] = least[0]
        table.flags.writeable = False
        return table

    @classmethod
    def from_pairs(cls, elements: Sequence, pairs: Iterable[tuple]) -> "FiniteLattice":
        """Build from ``(a, b)`` pairs meaning a ≤ b; reflexive-transitive closure is taken."""
        elements = [str(e) for e in elements]
        idx = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        leq = np.eye(n, dtype=bool)
        for a, b in pairs:
            leq[idx[str(a)], idx[str(b)]] = True
        for k in range(n):
            leq |= np.outer(leq[:, k], leq[k, :])
        return cls(elements, leq)

    @classmethod
    def chain(cls, n: int) -> "FiniteLattice":
        idx = np.arange(n)
        return cls([str(i) for i in range(n)], idx[:, None] <= idx[None, :])

    @classmethod
    def boolean(cls, atoms: int) -> "FiniteLattice":
        """Subsets of ``atoms`` points ordered by inclusion, labelled like ``{0,1}``."""
        fam = SetFamily.power_set(GroundSet.range(atoms))
        return cls.from_family(fam)

    @classmethod
    def from_family(cls, fam: SetFamily) -> "FiniteLattice":
        """The family ordered by inclusion; element ``i`` is ``fam.masks[i]``."""
        leq = np.array([[a & ~b == 0 for b in fam.masks] for a in fam.masks], dtype=bool)
        return cls([fam.ground.fmt(x) for x in fam.masks], leq)

    def __repr__(self) -> str:
        return f"FiniteLattice({list(self.elements)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteLattice)
            and self.elements == other.elements
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.leq.tobytes()))

    def __len__(self) -> int:
        return self.n

    @cached_property
    def ground(self) -> GroundSet:
        return GroundSet(self.elements)

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    def join_all(self, xs: Iterable[int]) -> int:
        return reduce(self.join, xs, self.bottom)

    def meet_all(self, xs: Iterable[int]) -> int:
        return reduce(self.meet, xs, self.top)

    def join_mask(self, mask: int) -> int:
        return self.join_all(bits_of(mask))

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    @cached_property
    def _down(self) -> tuple[int, ...]:
        return tuple(sum(1 << int(i) for i in np.flatnonzero(self.leq[:, a])) for a in range(self.n))

    @cached_property
    def _up(self) -> tuple[int, ...]:
        return tuple(sum(1 << int(i) for i in np.flatnonzero(self.leq[a, :])) for a in range(self.n))

    def down(self, a: int) -> int:
        """Mask of the principal downset of ``a``."""
        return self._down[a]

    def up(self, a: int) -> int:
        return self._up[a]

    def down_closure(self, mask: int) -> int:
        out = 0
        for a in bits_of(mask):
            out |= self._down[a]
        return out

    def is_downset(self, mask: int) -> bool:
        return self.down_closure(mask) == mask

    def downsets(self) -> list[int]:
        """Every downset, ∅ included, in ascending mask order."""
        return sorted(next_closure(self.down_closure, self.n))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(a, b)`` with ``b`` covering ``a``."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        li = lt.astype(np.int64)
        cov = lt & ~(li @ li > 0)
        return tuple((int(a), int(b)) for a, b in zip(*np.nonzero(cov)))

    def lower_covers(self, a: int) -> list[int]:
        return [x for x, y in self.covers if y == a]

    def is_distributive(self) -> bool:
        r = range(self.n)
        return all(
            self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
            for a in r for b in r for c in r
        )

    def relabel(self, order: Sequence[int]) -> "FiniteLattice":
        """The same lattice with elements listed in ``order`` (old indices)."""
        order = list(order)
        return FiniteLattice([self.elements[i] for i in order], self.leq[np.ix_(order, order)])


@dataclass(frozen=True)
class PointedLattice:
    """A lattice with a chosen subset of elements, stored as a mask."""

    lattice: FiniteLattice
    chosen: int

    @classmethod
    def of(cls, lattice: FiniteLattice, chosen: Iterable) -> "PointedLattice":
        mask = 0
        for c in chosen:
            mask |= 1 << (lattice.index[c] if isinstance(c, str) else int(c))
        return cls(lattice, mask)

    def chosen_indices(self) -> list[int]:
        return list(bits_of(self.chosen))

    def chosen_labels(self) -> list[str]:
        return [self.lattice.elements[i] for i in bits_of(self.chosen)]

    def generation_failures(self) -> list[int]:
        """Elements ``a`` with ``a != ⋁(↓a ∩ S)``."""
        L = self.lattice
        return [a for a in range(L.n) if L.join_mask(L.down(a) & self.chosen) != a]

    def is_generating(self) -> bool:
        return not self.generation_failures()

    def __repr__(self) -> str:
        return f"PointedLattice({list(self.lattice.elements)}, chosen={self.chosen_labels()})"


@dataclass(frozen=True)
class LatticeMap:
    dom: FiniteLattice
    cod: FiniteLattice
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(x) for x in self.assignment))
        if len(self.assignment) != self.dom.n:
            raise ValueError("assignment must cover every domain element")
        if any(not 0 <= y < self.cod.n for y in self.assignment):
            raise ValueError("assignment references an element outside the codomain")

    @classmethod
    def identity(cls, lattice: FiniteLattice) -> "LatticeMap":
        return cls(lattice, lattice, tuple(range(lattice.n)))

    @classmethod
    def from_labels(cls, dom: FiniteLattice, cod: FiniteLattice, mapping: dict) -> "LatticeMap":
        return cls(dom, cod, tuple(cod.index[str(mapping[e])] for e in dom.elements))

    def __call__(self, a: int) -> int:
        return self.assignment[a]

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{self.dom.elements[i]}->{self.cod.elements[j]}" for i, j in enumerate(self.assignment)
        )
        return f"LatticeMap({pairs})"

    def then(self, g: "LatticeMap") -> "LatticeMap":
        """Composite ``g ∘ self``."""
        return LatticeMap(self.dom, g.cod, tuple(g(y) for y in self.assignment))

    def is_monotone(self) -> bool:
        f, L, M = self.assignment, self.dom, self.cod
        return all(M.leq[f[a], f[b]] for a, b in zip(*np.nonzero(L.leq)))

    def preserves_meets(self) -> bool:
        """All meets, the empty one (top) included."""
        f, L, M = self.assignment, self.dom, self.cod
        if f[L.top] != M.top:
            return False
        r = range(L.n)
        return all(f[L.meet(a, b)] == M.meet(f[a], f[b]) for a in r for b in r if a < b)

    def preserves_joins(self) -> bool:
        """All joins, the empty one (bottom) included."""
        f, L, M = self.assignment, self.dom, self.cod
        if f[L.bottom] != M.bottom:
            return False
        r = range(L.n)
        return all(f[L.join(a, b)] == M.join(f[a], f[b]) for a in r for b in r if a < b)

    def is_coframe_hom(self) -> bool:
        # finite lattices: finite joins are all joins
        return self.preserves_meets() and self.preserves_joins()

    def image_mask(self, mask: int) -> int:
        out = 0
        for a in bits_of(mask):
            out |= 1 << self.assignment[a]
        return out

    def preimage_mask(self, mask: int) -> int:
        return sum(1 << a for a, y in enumerate(self.assignment) if mask >> y & 1)


def all_maps(dom: FiniteLattice, cod: FiniteLattice) -> Iterator[LatticeMap]:
    for assignment in product(range(cod.n), repeat=dom.n):
        yield LatticeMap(dom, cod, assignment)


def left_adjoint(f: LatticeMap) -> LatticeMap:
    """``f*(m) = ⋀{x : m ≤ f(x)}``; exists exactly when ``f`` preserves all meets."""
    if not f.is_monotone():
        raise NotMonotone(repr(f))
    L, M = f.dom, f.cod
    g = LatticeMap(M, L, tuple(
        L.meet_all(x for x in range(L.n) if M.leq[m, f(x)]) for m in range(M.n)
    ))
    for m in range(M.n):
        for x in range(L.n):
            if L.leq[g(m), x] != M.leq[m, f(x)]:
                raise AdjointLawFailure(
                    f"no left adjoint: law fails at m={M.elements[m]}, x={L.elements[x]}"
                )
    return g


def right_adjoint(f: LatticeMap) -> LatticeMap:
    """``f_*(m) = ⋁{x : f(x) ≤ m}``; exists exactly when ``f`` preserves all joins."""
    if not f.is_monotone():
        raise NotMonotone(repr(f))
    L, M = f.dom, f.cod
    g = LatticeMap(M, L, tuple(
        L.join_all(x for x in range(L.n) if M.leq[f(x), m]) for m in range(M.n)
    ))
    for m in range(M.n):
        for x in range(L.n):
            if M.leq[f(x), m] != L.leq[x, g(m)]:
                raise AdjointLawFailure(
                    f"no right adjoint: law fails at m={M.elements[m]}, x={L.elements[x]}"
                )
    return g


@dataclass(frozen=True)
class LatticeAdjoints:
    left: LatticeMap | None
    right: LatticeMap | None


def lattice_adjoints(f: LatticeMap) -> LatticeAdjoints:
    """Both adjoints of a monotone map, ``None`` where one does not exist.

    Raises :class:`NotMonotone` for non-monotone maps and
    :class:`AdjointLawFailure` if neither adjoint exists.
    """
    try:
        left = left_adjoint(f)
    except AdjointLawFailure:
        left = None
    try:
        right = right_adjoint(f)
    except AdjointLawFailure:
        right = None
    if left is None and right is None:
        raise AdjointLawFailure(f"{f!r} preserves neither meets nor joins")
    return LatticeAdjoints(left, right)

