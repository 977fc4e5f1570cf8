import random
from fractions import Fraction
from itertools import product

import pytest

from convexdual import corpus
from convexdual.adjunction import is_teetotal
from convexdual.errors import InvalidMeasure, InvalidMetric, NotAGroup, NotInjective, OutOfRange, SearchSpaceTooLarge
from convexdual.examples import (
    FiniteMetric,
    MeasureSpace,
    betweenness_hull,
    cyclic_group_table,
    is_betweenness_closed,
    lattice_ideal_space,
    line_metric,
    measure_algebra_space,
    metric_betweenness_space,
    subalgebra_space,
)
from convexdual.lattice import FiniteLattice
from convexdual.sets import GroundSet, SetFamily
from convexdual.spaces import is_compatible, is_tc_hom, validate_topconvex
from convexdual import symmetric as sym


def test_metric_validation():
    g = GroundSet.range(2)
    with pytest.raises(InvalidMetric):
        FiniteMetric(g, ((0, 1), (2, 0)))
    with pytest.raises(InvalidMetric):
        FiniteMetric(g, ((0, 0), (0, 0)))
    with pytest.raises(InvalidMetric):
        FiniteMetric(GroundSet.range(3), ((0, 1, 5), (1, 0, 1), (5, 1, 0)))
    assert line_metric(["1/2", 2]).d[0][1] == Fraction(3, 2)


def test_metric_betweenness_examples():
    m = line_metric([0, 1, 2])
    x = metric_betweenness_space(m)
    assert 0b101 not in x.convex.members and 0b111 in x.convex.members and validate_topconvex(x)
    assert metric_betweenness_space(line_metric([0, 3])).convex.is_power_set
    eq = FiniteMetric.from_function(GroundSet.range(3), lambda i, j: int(i != j))
    assert metric_betweenness_space(eq).convex.is_power_set
    assert betweenness_hull(m, 0b101) == 0b111 and is_betweenness_closed(m, 0b011)


def test_lattice_ideal_space():
    b4 = lattice_ideal_space(FiniteLattice.boolean(2))
    assert len(b4.closed) == 6 and len(b4.convex) == 5
    one = lattice_ideal_space(FiniteLattice.chain(1))
    assert len(one.closed) == 2
    for l in corpus.all_lattices(6):
        x = lattice_ideal_space(l)
        assert validate_topconvex(x) and is_compatible(x) and is_teetotal(x)


def test_groups():
    z2 = subalgebra_space(cyclic_group_table(2))
    assert z2.convex.masks == (0, 0b01, 0b11)
    assert subalgebra_space([[0]]).convex.masks == (0, 1)
    assert len(subalgebra_space(cyclic_group_table(4)).convex) == 4
    klein = [[a ^ b for b in range(4)] for a in range(4)]
    assert len(subalgebra_space(klein, "eabc").convex) == 6
    with pytest.raises(NotAGroup):
        subalgebra_space([[0, 0], [0, 0]])
    with pytest.raises(NotAGroup):
        subalgebra_space([[0, 1], [1, 1]])
    for t in (cyclic_group_table(3), klein):
        assert validate_topconvex(subalgebra_space(t))


# measure algebras


def test_measure_examples():
    ma = measure_algebra_space(MeasureSpace(GroundSet.range(2), (1, 2)))
    a, b = 0b01, 0b10
    assert ma.metric.d[a][b] == 3
    assert all(ma.metric.d[k][k] == 0 for k in range(4))
    assert validate_topconvex(ma.space)
    with pytest.raises(InvalidMeasure):
        MeasureSpace(GroundSet.range(2), (1, 0))
    with pytest.raises(OutOfRange):
        measure_algebra_space(MeasureSpace(GroundSet.range(5), (1,) * 5))


def test_measure_equivalence_three_atoms():
    rng = random.Random(7)
    for _ in range(10):
        mass = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)]
        ma = measure_algebra_space(MeasureSpace(GroundSet.range(3), mass))
        assert not ma.betweenness_failures() and not ma.recovery_failures()
        # the convex sets are exactly the betweenness-closed ones
        assert metric_betweenness_space(ma.metric).convex == ma.space.convex


def test_null_atom_breaks_metric():
    # a zero mass makes two distinct sets sit at distance 0
    with pytest.raises(InvalidMetric):
        mass = (1, 0)
        FiniteMetric.from_function(GroundSet.range(4), lambda a, b: sum(mass[i] for i in range(2) if (a ^ b) >> i & 1))


# symmetric groups


def test_perm_helpers():
    assert sym.compose((2, 1, 3), (1, 3, 2)) == (2, 3, 1)
    s = (3, 1, 2)
    assert sym.compose(s, sym.inverse(s)) == sym.identity(3)
    assert sym.inversions(sym.reversal(4)) == 6
    assert sym.adjacent(3, 1) == (2, 1, 3)


def test_half_spaces_and_space():
    g = sym.perm_ground(3)
    assert g.fmt(sym.half_space(3, 1, 2)) == "{123,132,231}"
    x = sym.perm_space(3)
    assert len(x.convex) == 20 and validate_topconvex(x)
    assert [len(sym.order_sets(n)) for n in (3, 4)] == [20, 220]
    # a total order picks one permutation
    total = x.ground.full
    for i in (1, 2):
        total &= sym.half_space(3, i, i + 1)
    assert total == 1 << g.index["123"]
    with pytest.raises(OutOfRange):
        sym.perm_space(6)
    with pytest.raises(OutOfRange):
        sym.perm_space(1)


def test_perm_space_not_compatible():
    # the topology is discrete, so any two-point convex set is disconnected
    assert not is_compatible(sym.perm_space(3))


def test_coxeter_metric():
    e = sym.identity(3)
    assert sym.coxeter_distance(e, sym.adjacent(3, 1)) == 1
    assert sym.coxeter_distance(e, sym.reversal(3)) == 3
    m = sym.coxeter_metric(4)  # validated on construction
    assert len(m.points) == 24


def test_order_sets_betweenness_closed():
    for n in (3, 4):
        m = sym.coxeter_metric(n)
        assert all(is_betweenness_closed(m, a) for a in sym.order_sets(n))


def test_alpha_delta():
    f = sym.alpha_delta(3, 2, (1, 3))
    g3, g2 = sym.perm_ground(3), sym.perm_ground(2)
    assert g2.labels[f(g3.index["213"])] == "12"
    ident = sym.alpha_delta(3, 3, (1, 2, 3))
    assert ident.assignment == tuple(range(6))
    d = sym.alpha_delta(3, 2, (1, 2), "delta")
    assert g2.labels[d(g3.index["123"])] == "21"
    with pytest.raises(NotInjective):
        sym.alpha_delta(3, 2, (1, 1))
    src, dst = sym.perm_space(4), sym.perm_space(3)
    for g in sym.injections(4, 3):
        for v in ("alpha", "delta"):
            h = sym.alpha_delta(4, 3, g, v)
            assert h.is_surjective() and is_tc_hom(h, src, dst)


def test_half_space_preimages():
    # α_g pulls C_ij back to C_g(i)g(j), δ_g to C_g(j)g(i)
    for g in sym.injections(4, 3):
        a, d = sym.alpha_delta(4, 3, g), sym.alpha_delta(4, 3, g, "delta")
        for (i, j), h in sym.half_spaces(3).items():
            assert a.preimage(h) == sym.half_space(4, g[i - 1], g[j - 1])
            assert d.preimage(h) == sym.half_space(4, g[j - 1], g[i - 1])


def test_half_space_covers():
    assert sym.half_space_cover_failures(4) == []
    assert sym.half_space_cover_failures(3) == []


def test_automorphisms_small():
    c = sym.classify_perm_homs(3, 3)
    assert c.ok and c.count == 12
    assert sym.automorphisms_raw(2) == sym.expected_automorphisms(2)
    assert len(sym.expected_automorphisms(4)) == 48
    with pytest.raises(SearchSpaceTooLarge):
        sym.automorphisms_raw(4)


def test_surjections_s3_s2():
    c = sym.classify_perm_homs(3, 2)
    assert c.ok and c.count == 6
    # the brute sweep agrees with the generic filter
    assert c.maps == sym.surjective_homs_raw(3, 2, limit=10**7) == sym.surjective_homs_search(3, 2)[0]
    # α_g and δ_{g reversed} coincide when m = 2
    for g in sym.injections(3, 2):
        assert sym.alpha_delta(3, 2, g).assignment == sym.alpha_delta(3, 2, g[::-1], "delta").assignment


def test_classify_guards():
    with pytest.raises(OutOfRange):
        sym.classify_perm_homs(2, 3)
    with pytest.raises(SearchSpaceTooLarge):
        sym.classify_perm_homs(5, 5)
    with pytest.raises(SearchSpaceTooLarge):
        sym.classify_perm_homs(5, 3)
