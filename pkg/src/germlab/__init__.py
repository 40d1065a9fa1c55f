"""Milnor and Tjurina invariants of isolated hypersurface singularities."""

from germlab.polyring import GLOBAL, LOCAL, MonomialOrder, Polynomial, Term
from germlab.parsing import format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "GLOBAL",
    "LOCAL",
    "MonomialOrder",
    "Polynomial",
    "Term",
    "format_poly",
    "parse_poly",
]
