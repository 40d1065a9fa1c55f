"""
How large can mu / tau get?
===========================

The germs (x_1 ... x_n)^2 + sum x_i^(2n+2) have f^(n-1) outside the
Jacobian ideal, so the filtration by powers of f has full length.
"""

from fractions import Fraction

from germlab import parse_poly
from germlab.milnor import MilnorAlgebra, verify_theorem

VARS = ["x", "y", "z", "w"]

for n in (2, 3, 4):
    v = VARS[:n]
    src = "(" + "*".join(v) + ")^2 + " + " + ".join(f"{x}^{2 * n + 2}" for x in v)
    f = parse_poly(src, v)
    alg = MilnorAlgebra(f)
    chk = verify_theorem(f, alg)
    ratio = Fraction(alg.mu, alg.tau)
    print(f"n={n}: mu={alg.mu} tau={alg.tau} mu/tau={ratio} (~{float(ratio):.4f})")
    print("    d_i =", chk.profile.d, " f^(n-1) in J_f:", alg.power_membership(n - 1))
