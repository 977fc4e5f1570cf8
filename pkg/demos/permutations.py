"""Convexity on S_n from partial orders, and its homomorphisms."""

from convexdual import symmetric as sym
from convexdual.examples import is_betweenness_closed

for n in (3, 4):
    print(f"S_{n}: {len(sym.order_sets(n))} convex sets")

g = sym.perm_ground(3)
print("C_12 =", g.fmt(sym.half_space(3, 1, 2)))

m = sym.coxeter_metric(4)
print("d(1234, 4321) =", m.d[0][23])
print("order sets are betweenness closed:", all(is_betweenness_closed(m, a) for a in sym.order_sets(4)))
print("half-space cover failures for n = 5:", len(sym.half_space_cover_failures(5)))

for n, k in ((3, 3), (4, 4), (3, 2), (4, 2), (4, 3)):
    c = sym.classify_perm_homs(n, k)
    print(f"S_{n} -> S_{k}: {c.count} maps by {c.method}, matches expected family: {c.ok}")

# when m = 2, α_g and δ_g for the reversed injection are the same map
f = sym.alpha_delta(3, 2, (1, 3))
h = sym.alpha_delta(3, 2, (3, 1), "delta")
print("α_(1,3) == δ_(3,1):", f == h)
