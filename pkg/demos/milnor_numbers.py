"""
Milnor numbers two ways
=======================

The Milnor number of f at the origin is the dimension of the local ring
modulo the partial derivatives of f.  germlab computes it from a local
standard basis and, independently, from truncated quotients.
"""

from germlab import Ring, milnor_number, milnor_oracle, standard_catalog

R = Ring("x,y")

# the cusp: two standard monomials (1 and x) survive
cusp = R.parse("x^3 - y^2")
print(cusp, "->", milnor_number(cusp))

# a smooth point has mu = 0, a non-isolated singularity has no finite mu
print(milnor_number(R.parse("x + y^2")))
print(milnor_number(R.parse("x^2*y^2")))

# the simple singularities, checked by both engines
for entry in standard_catalog():
    mu = milnor_number(entry.germ).mu
    print(f"{entry.name:4s} {str(entry.germ):16s} mu = {mu:2d}  oracle = {milnor_oracle(entry.germ)}")

# a degree-8 curve where the answer is not a box count
f = R.parse("x^8 + y^8 + x^3*y^3")
print(f, "->", milnor_number(f), "oracle:", milnor_oracle(f))
