"""The symmetric-difference metric on a finite measure algebra."""

from fractions import Fraction

from convexdual.examples import MeasureSpace, measure_algebra_space, metric_betweenness_space
from convexdual.sets import GroundSet

ms = MeasureSpace(GroundSet(("a", "b", "c")), (Fraction(1, 2), 1, 3))
alg = measure_algebra_space(ms)
g = alg.space.ground
print("points:", g.labels)
print("d({a}, {b,c}) =", alg.metric.d[g.index["{a}"]][g.index["{b,c}"]])
print("betweenness failures:", len(alg.betweenness_failures()))
print("μ(B) = d(∅, B) failures:", len(alg.recovery_failures()))
same = metric_betweenness_space(alg.metric).convex == alg.space.convex
print("intervals are exactly the metrically convex sets:", same)
