import random

import pytest

from convexdual import corpus
from convexdual.adjunction import cc
from convexdual.errors import GroundMismatch, InvalidSpace, SearchSpaceTooLarge
from convexdual.examples import lattice_ideal_space
from convexdual.sets import GroundSet, SetFamily
from convexdual.spaces import (
    PreconvexSpace,
    SpaceMap,
    TopConvexSpace,
    all_functions,
    disconnected_convex_sets,
    enumerate_homs,
    is_compatible,
    is_pre_hom,
    is_tc_hom,
    validate_preconvex,
    validate_topconvex,
)

from oracles import brute_hom

G3, G2, G1 = GroundSet.range(3), GroundSet.range(2), GroundSet.range(1)


def fam(g, *sets):
    return SetFamily.of(g, [list(map(str, s)) for s in sets])


NO_LIFT_TARGET = TopConvexSpace(G2, fam(G2, (), {0, 1}), fam(G2, (), {0}, {0, 1}))
FIVE = PreconvexSpace(G3, fam(G3, (), {0}, {1}, {2}, {0, 1, 2}))
F = SpaceMap(G3, G2, (0, 0, 1))
SIERPINSKI = TopConvexSpace.from_topology(fam(G2, (), {0}, {0, 1}))


def test_validate_examples():
    assert validate_topconvex(NO_LIFT_TARGET).ok
    bad = TopConvexSpace(G2, fam(G2, ()), fam(G2, (), {0, 1}))
    assert any("empty intersection" in v for v in validate_topconvex(bad).violations)
    assert validate_topconvex(TopConvexSpace(G2, SetFamily.power_set(G2), fam(G2, (), {0}, {1}, {0, 1})))
    assert validate_preconvex(FIVE)
    assert not validate_preconvex(PreconvexSpace(G2, fam(G2, {0}, {0, 1})))
    assert validate_preconvex(PreconvexSpace(G3, SetFamily.power_set(G3)))


def test_validate_lists_every_violation():
    s = TopConvexSpace(G3, fam(G3, (), {0}, {1}), fam(G3, {0, 1}, {1, 2}))
    v = validate_topconvex(s).violations
    assert len(v) == 5  # closed: X, {0}∪{1}; convex: X, ∅, {0,1}∩{1,2}


def test_no_lift_homs():
    p = PreconvexSpace(G2, SetFamily.trivial(G2))
    assert is_pre_hom(F, FIVE, p)
    # a domain whose convex sets lack {0,1} cannot carry f
    src = TopConvexSpace(G3, SetFamily.power_set(G3), FIVE.preconvex)
    assert not is_tc_hom(F, src, NO_LIFT_TARGET)


def test_identity_and_constant_maps():
    for x in corpus.tc_corpus(count=20):
        assert is_tc_hom(SpaceMap.identity(x.ground), x, x)
    const = SpaceMap(G3, G2, (0, 0, 0))
    assert is_tc_hom(const, TopConvexSpace.discrete(G3), NO_LIFT_TARGET)
    assert is_tc_hom(const, TopConvexSpace(G3, SetFamily.trivial(G3), SetFamily.trivial(G3)), NO_LIFT_TARGET)


def test_any_map_into_indiscrete_is_pre_hom():
    p = PreconvexSpace(G2, SetFamily.trivial(G2))
    for f in all_functions(G3, G2):
        assert is_pre_hom(f, FIVE, p)


def test_identity_lemma():
    for a in corpus.preconvex_families(3):
        for b in corpus.preconvex_families(3):
            ident = SpaceMap.identity(G3)
            assert is_pre_hom(ident, PreconvexSpace(G3, a), PreconvexSpace(G3, b)) == (b <= a)


def test_ground_mismatch():
    with pytest.raises(GroundMismatch):
        is_tc_hom(F, NO_LIFT_TARGET, NO_LIFT_TARGET)
    with pytest.raises(GroundMismatch):
        F.then(F)


def test_enumerate_homs_examples():
    homs = enumerate_homs(SIERPINSKI, SIERPINSKI, "tc")
    assert len(homs) == 3
    point = TopConvexSpace.discrete(G1)
    assert len(enumerate_homs(SIERPINSKI, point)) == 1
    pre = enumerate_homs(FIVE, PreconvexSpace(G2, SetFamily.trivial(G2)), "pre")
    assert F in pre
    assert [f.assignment for f in pre] == sorted(f.assignment for f in pre)


def test_enumerate_limit():
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_homs(FIVE, FIVE, "pre", limit=26)
    with pytest.raises(ValueError):
        enumerate_homs(FIVE, FIVE, "nope")


def test_hom_checks_match_brute_force():
    rng = random.Random(3)
    xs = corpus.tc_perturbations(30, 3, seed=5)
    for _ in range(60):
        a, b = rng.choice(xs), rng.choice(xs)
        for f in all_functions(a.ground, b.ground):
            want = brute_hom(f, b.closed.masks, set(a.closed.masks)) and brute_hom(
                f, b.convex.masks, set(a.convex.masks))
            assert is_tc_hom(f, a, b) == want


def test_homs_compose():
    rng = random.Random(11)
    xs = corpus.tc_perturbations(25, 3, seed=9)
    for _ in range(40):
        a, b, c = rng.sample(xs, 3)
        for f in enumerate_homs(a, b):
            for g in enumerate_homs(b, c):
                assert is_tc_hom(f.then(g), a, c)


def test_tc_hom_gives_pre_hom_of_cc():
    xs = corpus.tc_perturbations(20, 3, seed=2)
    for a in xs:
        for b in xs:
            for f in enumerate_homs(a, b):
                assert is_pre_hom(f, cc(a), cc(b))


def test_compatibility_examples():
    for n in range(1, 6):
        for l in corpus.lattices(n):
            assert is_compatible(lattice_ideal_space(l))
    s = TopConvexSpace(G2, SetFamily.power_set(G2), fam(G2, (), {0}, {1}, {0, 1}))
    assert not is_compatible(s)
    c, f1, f2 = disconnected_convex_sets(s)[0]
    assert c == G2.full and {f1, f2} == {1, 2}
    assert is_compatible(TopConvexSpace.discrete(G1))
    # indiscrete topology: nothing can be split
    assert is_compatible(TopConvexSpace.from_topology(SetFamily.trivial(G3)))
    assert not is_compatible(TopConvexSpace.discrete(G3))
    with pytest.raises(InvalidSpace):
        is_compatible(TopConvexSpace(G2, fam(G2, ()), fam(G2, ())))


def test_connectedness_is_checked_on_the_set_only():
    # {0,2} is covered by closed {0,1} and {1,2}, which meet only outside it
    closed = fam(G3, (), {1}, {0, 1}, {1, 2}, {0, 1, 2})
    s = TopConvexSpace(G3, closed, fam(G3, (), {0, 2}, {0, 1, 2}))
    assert not is_compatible(s)
