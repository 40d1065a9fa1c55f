"""
Milnor and Tjurina numbers of a plane curve
===========================================

Two germs with the same Milnor number can have different Tjurina numbers.
"""

from germlab import parse_poly
from germlab.milnor import MilnorAlgebra

# a weighted homogeneous curve: f lies in its own Jacobian ideal
f = parse_poly("x^3 + y^7", ["x", "y"])
alg = MilnorAlgebra(f)
print("x^3 + y^7:", "mu =", alg.mu, "tau =", alg.tau)

# add a term of higher weight and tau drops
g = parse_poly("x^3 + y^7 + x*y^5", ["x", "y"])
alg = MilnorAlgebra(g)
print("x^3 + y^7 + x*y^5:", "mu =", alg.mu, "tau =", alg.tau)

# the staircase is the monomial basis of the Milnor algebra
print("basis exponents:", alg.basis.monomials[:6], "...")

# multiplication by g is nilpotent; it is nonzero exactly when tau < mu
A = alg.operator
print("A = 0:", A.is_zero(), " rank A =", A.rank_of_power(1), " A^2 = 0:", A.power(2).is_zero())
