"""
Pulling a cusp back through a fold
==================================

Take V = {x^3 - y^2 = 0} and the fold F(x, y) = (x, y^2).  The preimage
W = F^{-1}(V) is cut out by x^3 - y^4, an E6 curve, so mu grows from 2 to 6.
"""

from germlab import MapGerm, Ring, local_multiplicity, reduced_preimage, verify_theorem
from germlab.parser import parse_map

R = Ring("x,y")
g = R.parse("x^3 - y^2")
F = MapGerm(parse_map("x; y^2", R))

# the fold is 2-to-1, so its local multiplicity is 2
print("multiplicity:", local_multiplicity(F))

# g o F is already reduced: r = 1 and the power test is pure
pre = reduced_preimage(g, F)
print("g o F =", pre.pullback)
print("h =", pre.h, " r =", pre.r, " pure =", pre.pure)

rep = verify_theorem(g, F)
print("mu(V) =", rep.mu_V, " mu(W) =", rep.mu_W)
print("inequality:", rep.inequality_verdict, " corollary:", rep.corollary_verdict)

# pulling back through a map that cubes x gives a genuine power
pre = reduced_preimage(R.parse("x"), MapGerm(parse_map("x^3; y", R)))
print("x through (x^3, y): h =", pre.h, " r =", pre.r)

# a map that is not finite is detected, and the check is skipped
rep = verify_theorem(g, MapGerm(parse_map("x; x*y", R)))
print("non-finite map:", rep.inequality_verdict)
