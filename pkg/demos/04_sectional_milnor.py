"""
Sectional Milnor numbers
========================

Restrict f to random planes of each dimension and take the smallest Milnor
number seen.  The sequence starts 1, m - 1 and ends at mu; it is log-convex.
"""

from germlab import parse_poly
from germlab.sectional import SectionPlan, multiplicity_bounds, sectional_profile
from germlab.milnor import MilnorAlgebra

f = parse_poly("x^4 + y^5 + z^6 + x^2*y*z", ["x", "y", "z"])
plan = SectionPlan(samples=3, seed=42)
prof = sectional_profile(f, plan)
print("mu^i:", prof.mu_i, "log-convex:", prof.log_convex)

alg = MilnorAlgebra(f)
print(multiplicity_bounds(f, alg.mu, alg.tau))
