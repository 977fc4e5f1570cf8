"""Chosen generating sets and partial sup-lattices determine each other."""

from convexdual import corpus
from convexdual.lattice import FiniteLattice, PointedLattice
from convexdual.suplat import hom_equivalence_check, is_tcg, j_from_s, s_from_j, validate_partial_sup

b4 = FiniteLattice.boolean(2)
pl = PointedLattice.of(b4, ["{0}", "{1}"])
psl = j_from_s(pl)
print("J =", psl.j.to_labels())
print("valid:", validate_partial_sup(psl).ok, "generated by totally compact elements:", is_tcg(psl))
print("totally compact:", b4.ground.names(s_from_j(psl)))

pls = corpus.pointed_lattices(5)
same = all(s_from_j(j_from_s(p)) == p.chosen for p in pls)
print(f"{len(pls)} pointed lattices with at most 5 elements, roundtrip holds: {same}")

chain = j_from_s(PointedLattice(FiniteLattice.chain(3), 0b110))
print("hom equivalence Boolean 4 -> 3-chain:", hom_equivalence_check(psl, chain))
