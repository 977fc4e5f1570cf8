"""Finite T0 spaces and their coframes of closed sets."""

from convexdual import corpus
from convexdual.sets import GroundSet, SetFamily
from convexdual.spaces import TopConvexSpace
from convexdual.stone import (
    closed_coframe,
    coframe_fibre_bounds,
    pointed_from_space,
    separation_flags,
    space_from_pointed,
    stone_roundtrip_lattice,
    stone_roundtrip_space,
)

g = GroundSet.range(2)
sierpinski = TopConvexSpace.from_topology(SetFamily.of(g, [[], ["0"], ["0", "1"]]))
pl = pointed_from_space(sierpinski)
print("closed sets:", list(closed_coframe(sierpinski).elements))
print("chosen points:", pl.chosen_labels())
back = space_from_pointed(pl)
print("rebuilt space on", back.ground.labels, "closed", back.closed.to_labels())
print("roundtrips:", stone_roundtrip_space(sierpinski), stone_roundtrip_lattice(pl))

tops = corpus.t0_topologies(3)
ok = all(stone_roundtrip_space(TopConvexSpace.from_topology(f)) for f in tops)
print(f"{len(tops)} T0 topologies on 3 points, all roundtrip: {ok}")
flags = [separation_flags(f) for f in tops]
print("all T_D and sober:", all(fl.td and fl.sober for fl in flags))

# finite fibres are single points: the largest and smallest chosen sets agree
bounds = [coframe_fibre_bounds(l) for l in corpus.all_lattices(6)]
print("fibres over lattices with at most 6 elements are points:",
      all(b.top_points == b.bottom_points for b in bounds))
