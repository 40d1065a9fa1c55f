"""
Newton numbers
==============

For a convenient germ the Newton number is an alternating sum of volumes
under the Newton diagram.  It bounds mu from below, with equality for
nondegenerate germs.
"""

from germlab import parse_poly
from germlab.milnor import MilnorAlgebra
from germlab.newton import NotConvenient, newton_data

examples = [
    ("x^2 + y^3 + z^7", ["x", "y", "z"]),
    ("(x*y*z)^2 + x^8 + y^8 + z^8", ["x", "y", "z"]),
    # degenerate: the principal part is a square, so mu > nu
    ("(x + y)^2 + y^5 + x^5", ["x", "y"]),
]

for src, v in examples:
    f = parse_poly(src, v)
    data = newton_data(f)
    mu = MilnorAlgebra(f).mu
    vols = ", ".join(f"V{q}={val}" for q, val in data.volumes.items())
    print(f"{src}: {vols}  nu={data.nu}  mu={mu}")

# without a pure power of x the diagram never meets the x axis
try:
    newton_data(parse_poly("x^2*y + y^4", ["x", "y"])).nu
except NotConvenient as exc:
    print("not convenient:", exc)
