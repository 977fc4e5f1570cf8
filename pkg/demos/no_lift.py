"""A preconvex map that does not lift to topological convexity spaces.

Three points with every singleton preconvex map onto two points with only
the trivial preconvex sets.  Giving the target the convex set {0} breaks
liftability: its preimage {0,1} would have to be convex, and it is already
closed, so it would have been preconvex in the first place.
"""

from convexdual import corpus
from convexdual.adjunction import cc, check_adjunction, is_functor
from convexdual.sets import GroundSet, SetFamily
from convexdual.spaces import PreconvexSpace, SpaceMap, TopConvexSpace, is_pre_hom, is_tc_hom

g3, g2 = GroundSet.range(3), GroundSet.range(2)
p = PreconvexSpace(g3, SetFamily.of(g3, [[], ["0"], ["1"], ["2"], ["0", "1", "2"]]))
q = PreconvexSpace(g2, SetFamily.trivial(g2))
target = TopConvexSpace(g2, SetFamily.trivial(g2), SetFamily.of(g2, [[], ["0"], ["0", "1"]]))
f = SpaceMap(g3, g2, (0, 0, 1))

print("f =", f.as_labels())
print("f is a preconvex map:", is_pre_hom(f, p, q))
print("closed convex sets of the target:", cc(target).preconvex.to_labels())

lifts = []
for closed in corpus.topologies(3):
    for convex in corpus.preconvex_families(3):
        x = TopConvexSpace(g3, closed, convex)
        if cc(x) == p:
            print("candidate domain: closed", x.closed.to_labels(), "convex", x.convex.to_labels())
            lifts += [x] if is_tc_hom(f, x, target) else []
print("lifts found:", len(lifts))

# the adjunction still holds for the free space on p
x = is_functor(p)
print("hom-sets agree for IS(p) and the target:", check_adjunction(x, q))
