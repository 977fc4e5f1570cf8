from itertools import product

import pytest

from convexdual import corpus
from convexdual.adjunction import cc, is_functor, point_closure
from convexdual.errors import AdjointLawFailure, GenerationFailure, InvalidSpace, NotInfHom, SearchSpaceTooLarge
from convexdual.lattice import FiniteLattice, LatticeMap, PointedLattice, all_maps, lattice_adjoints, right_adjoint
from convexdual.sets import GroundSet, SetFamily, bits_of
from convexdual.spaces import PreconvexSpace, enumerate_homs
from convexdual.stone import lattice_points
from convexdual.suplat import (
    PartialSupLattice,
    equivalence_roundtrip,
    g_functor,
    hom_equivalence_check,
    is_partial_sup_hom,
    is_pointed_sup_morphism,
    is_tcg,
    j_from_s,
    partial_sup_hom_failures,
    preconvex_lattice,
    pullback_chosen,
    s_from_j,
    sup_to_topconvex,
    validate_partial_sup,
)

G2, G3 = GroundSet.range(2), GroundSet.range(3)
CHAIN2, CHAIN3, ONE = FiniteLattice.chain(2), FiniteLattice.chain(3), FiniteLattice.chain(1)
B4 = FiniteLattice.boolean(2)
BOT, A, B, TOP = (B4.index[k] for k in ("{}", "{0}", "{1}", "{0,1}"))
ATOMS = (1 << A) | (1 << B)
FIVE = PreconvexSpace(G3, SetFamily.of(G3, [[], ["0"], ["1"], ["2"], ["0", "1", "2"]]))


def mask(*elements):
    return sum(1 << e for e in elements)


def test_preconvex_lattice_examples():
    assert preconvex_lattice(FIVE).chosen_labels() == ["{0}", "{1}", "{2}"]
    ps = preconvex_lattice(PreconvexSpace(G2, SetFamily.power_set(G2)))
    assert ps.chosen == lattice_points(ps.lattice) and len(ps.chosen_indices()) == 2
    ind = preconvex_lattice(PreconvexSpace(G2, SetFamily.trivial(G2)))
    assert ind.chosen_labels() == ["{0,1}"]
    with pytest.raises(InvalidSpace):
        preconvex_lattice(PreconvexSpace(G2, SetFamily.of(G2, [["0"], ["0", "1"]])))


def test_g_functor_examples():
    p = g_functor(PointedLattice(B4, ATOMS))
    assert len(p.ground) == 2 and p.preconvex.is_power_set
    q = g_functor(PointedLattice(CHAIN3, 0b110))
    assert q.ground.labels == ("1", "2") and q.preconvex == SetFamily.of(q.ground, [[], ["1"], ["1", "2"]])
    e = g_functor(PointedLattice(ONE, 0))
    assert len(e.ground) == 0
    with pytest.raises(GenerationFailure):
        g_functor(PointedLattice(B4, 1 << A))
    with pytest.raises(InvalidSpace):
        g_functor(PointedLattice(CHAIN2, 0b11))


def test_equivalence_roundtrip():
    for p in corpus.preconvex_corpus():
        closures = [point_closure(p, x) for x in range(len(p.ground))]
        assert equivalence_roundtrip(p) == (len(set(closures)) == len(closures))
    assert equivalence_roundtrip(PointedLattice(B4, ATOMS))
    assert equivalence_roundtrip(PreconvexSpace(GroundSet.range(0), SetFamily(GroundSet.range(0), (0,))))
    for pl in corpus.pointed_lattices(5, include_bottom=False):
        assert equivalence_roundtrip(pl)
    assert not equivalence_roundtrip(PointedLattice(CHAIN2, 0b11))


def test_sup_to_topconvex_examples():
    x = sup_to_topconvex(CHAIN2)
    assert x.convex == SetFamily.of(x.ground, [[], ["0"], ["0", "1"]])
    assert len(sup_to_topconvex(B4).convex) == 5
    one = sup_to_topconvex(ONE)
    assert one.closed == one.convex == SetFamily.trivial(one.ground)


def test_lattice_adjoint_examples():
    ident = lattice_adjoints(LatticeMap.identity(B4))
    assert ident.left == ident.right == LatticeMap.identity(B4)
    inc = LatticeMap(CHAIN3, B4, (BOT, A, TOP))
    assert inc.preserves_meets()
    left = lattice_adjoints(inc).left
    assert all(CHAIN3.leq[left(m), x] == B4.leq[m, inc(x)] for m in range(4) for x in range(3))
    const = LatticeMap(B4, CHAIN3, (2, 2, 2, 2))
    with pytest.raises(AdjointLawFailure):
        right_adjoint(const)
    assert lattice_adjoints(const).right is None


def test_j_from_s_examples():
    psl = j_from_s(PointedLattice(B4, ATOMS))
    for d in (mask(BOT, A, B), mask(BOT, A), mask(BOT), 0):
        assert d in psl.j.members
    assert len(psl.j) == 6
    assert j_from_s(PointedLattice(CHAIN2, 0b10)).j.masks == (0, 0b01, 0b11)
    assert j_from_s(PointedLattice(ONE, 0)).j.masks == (0, 1)


def test_s_from_j_examples():
    assert s_from_j(j_from_s(PointedLattice(B4, ATOMS))) == ATOMS
    assert s_from_j(j_from_s(PointedLattice(CHAIN2, 0b10))) == 0b10
    # with every downset allowed, totally compact means join-prime, which
    # matches join-irreducible exactly on distributive lattices
    for l in corpus.all_lattices(5):
        full = PartialSupLattice(l, SetFamily(l.ground, tuple(l.downsets())))
        assert (s_from_j(full) == lattice_points(l)) == l.is_distributive()


def test_theta_is_join():
    psl = j_from_s(PointedLattice(B4, ATOMS))
    for d in psl.j.masks:
        assert psl.theta(d) == B4.join_mask(d)
    with pytest.raises(KeyError):
        psl.theta(mask(BOT, TOP) & ~mask(BOT))


def test_roundtrips_and_validation():
    for pl in corpus.pointed_lattices(5):
        psl = j_from_s(pl, check=True)
        assert s_from_j(psl) == pl.chosen
        assert j_from_s(PointedLattice(pl.lattice, s_from_j(psl))) == psl
        assert is_tcg(psl)


def test_validate_witnesses():
    missing = PartialSupLattice.of(CHAIN2, [[], ["0", "1"]])
    rep = validate_partial_sup(missing)
    assert rep.principal == ["0"] and not rep
    principal = PartialSupLattice(B4, SetFamily(B4.ground, tuple(B4.down(a) for a in range(4))))
    # ↓a ∩ ↓b = ↓⊥ is principal, so nothing is missing
    assert validate_partial_sup(principal).ok and is_tcg(principal)
    assert s_from_j(principal) == mask(BOT, A, B, TOP)
    not_down = PartialSupLattice.of(CHAIN2, [["1"], ["0"], ["0", "1"]])
    assert validate_partial_sup(not_down).downsets == [0b10]


def test_is_tcg_examples():
    assert is_tcg(PartialSupLattice(ONE, SetFamily(ONE.ground, (0, 1))))
    # without ∅ the bottom is not a join of totally compact elements
    no_empty = PartialSupLattice(CHAIN2, SetFamily(CHAIN2.ground, (0b01, 0b11)))
    assert s_from_j(no_empty) == 0b11 and is_tcg(no_empty)


def brute_partial_sup_hom(f, src, dst):
    L, M = src.lattice, dst.lattice
    for a in src.j.masks:
        img = 0
        for x in bits_of(a):
            img |= M.down(f(x))
        if img not in dst.j.members:
            return False
        if M.join_all(bits_of(img)) != f(L.join_all(bits_of(a))):
            return False
    return True


def test_partial_sup_hom_examples():
    psl = j_from_s(PointedLattice(B4, ATOMS))
    assert is_partial_sup_hom(LatticeMap.identity(B4), psl, psl)
    for pl in corpus.pointed_lattices(2):
        if pl.lattice.n != 2:
            continue
        src = j_from_s(pl)
        for dst_pl in (PointedLattice(B4, ATOMS), PointedLattice(B4, mask(A, B, TOP)), PointedLattice(B4, 0b1111)):
            dst = j_from_s(dst_pl)
            for f in all_maps(CHAIN2, B4):
                if not f.preserves_meets():
                    with pytest.raises(NotInfHom):
                        is_partial_sup_hom(f, src, dst)
                    continue
                assert is_partial_sup_hom(f, src, dst) == brute_partial_sup_hom(f, src, dst)
    # ⊥ ↦ a sends the empty join to a non-join
    f = LatticeMap(CHAIN2, B4, (A, TOP))
    src = j_from_s(PointedLattice(CHAIN2, 0b10))
    assert partial_sup_hom_failures(f, src, psl) == [0]


def test_hom_equivalence():
    psls = [j_from_s(pl) for pl in corpus.pointed_lattices(4)]
    for src, dst in product(psls, repeat=2):
        assert hom_equivalence_check(src, dst)
    b = j_from_s(PointedLattice(B4, ATOMS))
    c = j_from_s(PointedLattice(CHAIN3, 0b110))
    assert hom_equivalence_check(b, c) and hom_equivalence_check(c, b) and hom_equivalence_check(b, b)
    with pytest.raises(SearchSpaceTooLarge):
        hom_equivalence_check(b, b, limit=10)


def sup_homs(dom, cod):
    return [f for f in all_maps(dom, cod) if f.preserves_joins()]


def test_fibration_law():
    small = corpus.all_lattices(3)
    for pl_t in corpus.pointed_lattices(3):
        M = pl_t.lattice
        for L in corpus.all_lattices(3):
            for f in sup_homs(L, M):
                lift = pullback_chosen(f, pl_t)
                cartesian = []
                for s in range(1 << L.n):
                    cand = PointedLattice(L, s)
                    if not is_pointed_sup_morphism(f, cand, pl_t):
                        continue
                    good = all(
                        is_pointed_sup_morphism(g, PointedLattice(K, r), cand)
                        == is_pointed_sup_morphism(g.then(f), PointedLattice(K, r), pl_t)
                        for K in small for g in sup_homs(K, L) for r in range(1 << K.n)
                    )
                    if good:
                        cartesian.append(s)
                assert cartesian == [lift]


def test_chain_of_adjunctions():
    spaces = [is_functor(p) for p in corpus.preconvex_corpus(2)] + [is_functor(FIVE)]
    for x in spaces:
        p = cc(x)
        lat = FiniteLattice.from_family(p.preconvex)
        pos = {m: k for k, m in enumerate(p.preconvex.masks)}
        closures = [pos[point_closure(p, i)] for i in range(len(x.ground))]
        for L in corpus.all_lattices(4):
            homs = enumerate_homs(x, sup_to_topconvex(L))
            via_sup = sorted(tuple(h(c) for c in closures) for h in sup_homs(lat, L))
            assert via_sup == sorted(f.assignment for f in homs)
