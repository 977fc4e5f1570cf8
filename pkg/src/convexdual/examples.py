"""Generators for the standard finite examples: metrics, lattices, groups, measures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import InvalidMeasure, InvalidMetric, NotAGroup, OutOfRange
from .lattice import FiniteLattice
from .sets import GroundSet, SetFamily, bits_of, next_closure
from .spaces import TopConvexSpace
from .suplat import sup_to_topconvex


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class FiniteMetric:
    """Exact rational distances on a labelled point set."""

    points: GroundSet
    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        d = tuple(tuple(_frac(x) for x in row) for row in self.d)
        object.__setattr__(self, "d", d)
        if len(d) != n or any(len(row) != n for row in d):
            raise InvalidMetric(f"distance matrix must be {n}x{n}")
        for i in range(n):
            if d[i][i] != 0:
                raise InvalidMetric(f"d({self.points.labels[i]}, itself) = {d[i][i]}")
            for j in range(n):
                if d[i][j] != d[j][i]:
                    raise InvalidMetric("distance is not symmetric")
                if i != j and d[i][j] <= 0:
                    raise InvalidMetric("distinct points at distance ≤ 0")
                for k in range(n):
                    if d[i][k] > d[i][j] + d[j][k]:
                        a, b, c = (self.points.labels[x] for x in (i, j, k))
                        raise InvalidMetric(f"triangle inequality fails for {a}, {b}, {c}")

    @classmethod
    def from_function(cls, points: GroundSet, dist) -> "FiniteMetric":
        n = len(points)
        return cls(points, tuple(tuple(_frac(dist(i, j)) for j in range(n)) for i in range(n)))

    def between(self, x: int, y: int, z: int) -> bool:
        """``y`` lies between ``x`` and ``z``."""
        return self.d[x][z] == self.d[x][y] + self.d[y][z]

    def segment(self, x: int, z: int) -> int:
        return sum(1 << y for y in range(len(self.points)) if self.between(x, y, z))


def is_betweenness_closed(m: FiniteMetric, a: int) -> bool:
    return all(m.segment(x, z) & ~a == 0 for x in bits_of(a) for z in bits_of(a))


def betweenness_hull(m: FiniteMetric, a: int) -> int:
    while True:
        grown = a
        for x in bits_of(a):
            for z in bits_of(a):
                grown |= m.segment(x, z)
        if grown == a:
            return a
        a = grown


def metric_betweenness_space(m: FiniteMetric) -> TopConvexSpace:
    """Discrete topology with the betweenness-closed sets as convex sets."""
    g = m.points
    convex = SetFamily(g, tuple(next_closure(lambda a: betweenness_hull(m, a), len(g))))
    return TopConvexSpace(g, SetFamily.power_set(g), convex)


def lattice_ideal_space(l: FiniteLattice) -> TopConvexSpace:
    """Downsets closed, ideals (principal downsets and ∅) convex."""
    return sup_to_topconvex(l)


def line_metric(positions: Sequence) -> FiniteMetric:
    """Points on the rational line, labelled ``0..n-1``."""
    pos = [_frac(p) for p in positions]
    return FiniteMetric.from_function(GroundSet.range(len(pos)), lambda i, j: abs(pos[i] - pos[j]))


# groups


def _check_group(table: list[list[int]]) -> int:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
        raise NotAGroup("table is not a square operation on its elements")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not ids:
        raise NotAGroup("no identity")
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e == table[b][a] for b in range(n)):
            raise NotAGroup(f"element {a} has no inverse")
    return e


def subalgebra_space(mult_table: Sequence[Sequence], labels: Sequence[str] | None = None) -> TopConvexSpace:
    """Discrete topology with the subgroups and ∅ as convex sets.

    ``mult_table[a][b]`` is the index of ``a·b``.
    """
    table = [[int(x) for x in row] for row in mult_table]
    e = _check_group(table)
    n = len(table)
    ground = GroundSet(tuple(labels) if labels is not None else tuple(str(i) for i in range(n)))

    def generated(a: int) -> int:
        a |= 1 << e
        while True:
            grown = a
            for x in bits_of(a):
                for y in bits_of(a):
                    grown |= 1 << table[x][y]
            if grown == a:
                return a
            a = grown

    subgroups = tuple(next_closure(generated, n)) + (0,)
    return TopConvexSpace(ground, SetFamily.power_set(ground), SetFamily(ground, subgroups))


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


# measure algebras

MAX_ATOMS = 4


@dataclass(frozen=True)
class MeasureSpace:
    """Strictly positive rational masses on finitely many atoms."""

    atoms: GroundSet
    mass: tuple[Fraction, ...]

    def __post_init__(self):
        mass = tuple(_frac(x) for x in self.mass)
        object.__setattr__(self, "mass", mass)
        if len(mass) != len(self.atoms):
            raise InvalidMeasure("one mass per atom is required")
        if any(x <= 0 for x in mass):
            raise InvalidMeasure("masses must be strictly positive")

    def measure(self, mask: int) -> Fraction:
        return sum((self.mass[i] for i in bits_of(mask)), Fraction(0))


@dataclass(frozen=True)
class MeasureAlgebra:
    """The measure algebra as a space over ``2^atoms`` with its metric."""

    measure: MeasureSpace
    space: TopConvexSpace
    metric: FiniteMetric

    def interval_between(self, a: int, b: int, c: int) -> bool:
        """``A ∩ C ⊆ B ⊆ A ∪ C`` with ``A, B, C`` given as atom masks."""
        return (a & c) & ~b == 0 and b & ~(a | c) == 0

    def betweenness_failures(self) -> list[tuple[int, int, int]]:
        """Triples where metric betweenness and the interval condition disagree."""
        n = len(self.space.ground)
        return [
            (a, b, c)
            for a, b, c in product(range(n), repeat=3)
            if self.metric.between(a, b, c) != self.interval_between(a, b, c)
        ]

    def recovery_failures(self) -> list[int]:
        """Sets ``B`` with ``μ(B) != d(∅, B)``."""
        return [b for b in range(len(self.space.ground)) if self.measure.measure(b) != self.metric.d[0][b]]


def measure_algebra_space(ms: MeasureSpace) -> MeasureAlgebra:
    """Points are sets of atoms (point ``k`` is the atom set with mask ``k``)."""
    n = len(ms.atoms)
    if n > MAX_ATOMS:
        raise OutOfRange(f"at most {MAX_ATOMS} atoms, got {n}")
    ground = GroundSet(tuple(ms.atoms.fmt(k) for k in range(1 << n)))
    metric = FiniteMetric.from_function(ground, lambda a, b: ms.measure(a ^ b))
    intervals = {0}
    for lo in range(1 << n):
        for hi in range(1 << n):
            if lo & ~hi == 0:
                intervals.add(sum(1 << b for b in range(1 << n) if lo & ~b == 0 and b & ~hi == 0))
    space = TopConvexSpace(ground, SetFamily.power_set(ground), SetFamily(ground, tuple(intervals)))
    return MeasureAlgebra(ms, space, metric)
