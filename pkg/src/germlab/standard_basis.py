"""Standard bases in the local ring Q[x]_(x) via Mora's tangent cone algorithm.

The engine works on primitive integer polynomials (dicts ``exponent -> int``)
and converts to :class:`~germlab.polyring.Polynomial` only at the boundary.

Weak normal form
    Mora's algorithm: among the reducers whose leading monomial divides the
    leading monomial of ``h``, take the one of minimal ecart (earliest index
    on ties).  If that ecart exceeds the ecart of ``h``, ``h`` itself is
    appended to the reducer list before reducing.  This terminates for local
    degree orderings (Greuel-Pfister, Algorithm 1.7.6): the ecart of the
    current ``h`` can only grow by becoming a reducer, and the homogenized
    process is a Buchberger reduction in one more variable.

Highest corner
    Once the leading ideal of the partial basis contains pure powers
    ``x_i^{a_i}`` of every variable, it contains all monomials of degree
    ``D = sum(a_i - 1) + 1``, hence the ideal contains ``m^D``.  From then on
    every polynomial is truncated at degree ``D`` and the monomials of degree
    ``D`` not already covered are added as explicit generators, so the final
    basis is still a genuine standard basis of the ideal.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from germlab.polyring import (
    GLOBAL,
    LOCAL,
    MonomialOrder,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    primitive_part,
)

INFINITE = math.inf
DEFAULT_MAX_DIM = 5000


class StaircaseTooLarge(RuntimeError):
    pass


def max_dim_from_env() -> int:
    return int(os.environ.get("GERMLAB_MAX_DIM", DEFAULT_MAX_DIM))


class Ideal:
    """Ideal of the local ring given by polynomial generators."""

    def __init__(self, gens: Sequence[Polynomial]):
        gens = list(gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generators live in different rings")
        self.n = n
        self.gens = [g for g in gens if not g.is_zero()]
        if not self.gens:
            raise ValueError("all generators are zero")

    def __repr__(self):
        return f"Ideal({self.gens!r})"


# --- integer polynomial kernels -------------------------------------------------


class _Elem:
    __slots__ = ("terms", "lm", "lc", "ecart", "lmdeg")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.lmdeg = sum(self.lm)
        self.ecart = max(sum(e) for e in terms) - self.lmdeg


def _content_divide(terms: dict) -> dict:
    g = 0
    for c in terms.values():
        g = math.gcd(g, c)
        if g == 1:
            return terms
    if g > 1:
        return {e: c // g for e, c in terms.items()}
    return terms


def _reduce_step(h: _Elem, g: _Elem, corner: Optional[int]) -> dict:
    """``lc(g) h - lc(h) x^(lm h - lm g) g`` made primitive, truncated at ``corner``."""
    shift = tuple(a - b for a, b in zip(h.lm, g.lm))
    a, b = g.lc, h.lc
    d = math.gcd(a, b)
    a //= d
    b //= d
    out = {e: a * c for e, c in h.terms.items()} if a != 1 else dict(h.terms)
    for e, c in g.terms.items():
        e2 = tuple(x + y for x, y in zip(e, shift))
        if corner is not None and sum(e2) >= corner:
            continue
        v = out.get(e2, 0) - b * c
        if v:
            out[e2] = v
        else:
            del out[e2]
    return _content_divide(out)


def _truncate(terms: dict, corner: Optional[int]) -> dict:
    if corner is None:
        return terms
    return {e: c for e, c in terms.items() if sum(e) < corner}


def _as_int_terms(p) -> dict:
    if isinstance(p, Polynomial):
        return primitive_part(dict(p.items()))
    return primitive_part(p)


def _mora_nf_terms(h: dict, reducers: list, key, corner: Optional[int]) -> dict:
    h = _truncate(h, corner)
    if not h:
        return {}
    T = list(reducers)
    cur = _Elem(h, key)
    while True:
        best = None
        for g in T:
            if (best is None or g.ecart < best.ecart) and monomial_divides(g.lm, cur.lm):
                best = g
                if g.ecart == 0:
                    break
        if best is None:
            return cur.terms
        if best.ecart > cur.ecart:
            T.append(cur)
        terms = _reduce_step(cur, best, corner)
        if not terms:
            return {}
        cur = _Elem(terms, key)


def _global_nf_terms(h: dict, reducers: list, key) -> dict:
    # full reduction for a global ordering
    h = {e: Fraction(c) for e, c in h.items()}
    rem: dict = {}
    while h:
        e = max(h, key=key)
        red = next((g for g in reducers if monomial_divides(g.lm, e)), None)
        if red is None:
            rem[e] = h.pop(e)
            continue
        factor = h[e] / red.lc
        shift = tuple(a - b for a, b in zip(e, red.lm))
        for e2, c2 in red.terms.items():
            e3 = tuple(x + y for x, y in zip(e2, shift))
            v = h.get(e3, 0) - factor * c2
            if v:
                h[e3] = v
            else:
                h.pop(e3, None)
    return primitive_part(rem, GLOBAL) if rem else {}


def _to_poly(terms: dict, n: int) -> Polynomial:
    return Polynomial(terms, n)


# --- public API -----------------------------------------------------------------


def ecart(p: Polynomial, order: MonomialOrder = LOCAL) -> int:
    lt = p.leading_term(order)
    return p.degree() - sum(lt.exp)


def mora_normal_form(g: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = LOCAL,
                     corner: Optional[int] = None) -> Polynomial:
    """Weak normal form of ``g`` with respect to ``G``.

    For the local ordering the result ``h`` satisfies ``u*g = h mod <G>`` for a
    unit ``u``, up to a nonzero rational scalar.  ``h`` is zero or has a leading
    monomial outside ``L(G)``.  With a global ordering ordinary full reduction
    is performed.  ``corner`` truncates at that degree; pass it only when
    ``m^corner`` lies in ``<G>``.
    """
    n = g.n
    if g.is_zero():
        return g
    key = order.key
    reducers = [_Elem(_as_int_terms(p), key) for p in G if not p.is_zero()]
    h = _as_int_terms(g)
    if order.is_local:
        out = _mora_nf_terms(h, reducers, key, corner)
    else:
        out = _global_nf_terms(h, reducers, key)
    if not out:
        return Polynomial.zero(n)
    return _to_poly(out, n)


@dataclass(frozen=True)
class Staircase:
    monomials: tuple
    finite: bool

    def __len__(self):
        return len(self.monomials)

    @property
    def size(self):
        return len(self.monomials) if self.finite else INFINITE

    def max_degree(self) -> int:
        return max((sum(e) for e in self.monomials), default=-1)


@dataclass
class StandardBasis:
    ord: MonomialOrder
    n: int
    basis: list
    lead_exponents: frozenset
    corner: Optional[int] = None
    _elems: list = field(default_factory=list, repr=False)
    _staircase: Optional[Staircase] = field(default=None, repr=False)

    def polys(self) -> list:
        return list(self.basis)

    def staircase(self, max_dim: Optional[int] = None) -> Staircase:
        if self._staircase is None:
            self._staircase = staircase_of(self.lead_exponents, self.n, max_dim)
        return self._staircase

    def normal_form(self, g: Polynomial) -> Polynomial:
        if g.n != self.n:
            raise ValueError("ring dimension mismatch")
        if g.is_zero():
            return g
        key = self.ord.key
        h = _as_int_terms(g)
        if self.ord.is_local:
            out = _mora_nf_terms(h, self._elems, key, self.corner)
        else:
            out = _global_nf_terms(h, self._elems, key)
        return _to_poly(out, self.n) if out else Polynomial.zero(self.n)

    def contains(self, g: Polynomial) -> bool:
        return self.normal_form(g).is_zero()

    def reduced_coordinates(self, g: Polynomial) -> dict:
        """Exact class of ``g`` modulo the ideal as ``{staircase exponent: coeff}``.

        Unlike the weak normal form this is the class of ``g`` itself (no unit
        factor).  It needs a finite staircase: then ``m^D`` lies in the ideal for
        ``D = max staircase degree + 1`` and reduction modulo ``m^D`` terminates.
        """
        st = self.staircase()
        if not st.finite:
            raise ValueError("quotient is infinite-dimensional")
        corner = st.max_degree() + 1
        if self.corner is not None:
            corner = min(corner, self.corner)
        key = self.ord.key
        h = {e: c for e, c in g.items() if sum(e) < corner}
        rem: dict = {}
        elems = sorted(self._elems, key=lambda el: el.ecart)
        while h:
            e = max(h, key=key)
            c = h[e]
            red = next((el for el in elems if monomial_divides(el.lm, e)), None)
            if red is None:
                rem[e] = h.pop(e)
                continue
            factor = Fraction(c, red.lc)
            shift = tuple(a - b for a, b in zip(e, red.lm))
            for e2, c2 in red.terms.items():
                e3 = tuple(x + y for x, y in zip(e2, shift))
                if sum(e3) >= corner:
                    continue
                v = h.get(e3, 0) - factor * c2
                if v:
                    h[e3] = v
                else:
                    h.pop(e3, None)
        return rem


def _pure_power_corner(leads, n: int) -> Optional[int]:
    best = [None] * n
    for e in leads:
        nz = [i for i, a in enumerate(e) if a]
        if len(nz) == 1:
            i = nz[0]
            if best[i] is None or e[i] < best[i]:
                best[i] = e[i]
    if any(b is None for b in best):
        return None
    return sum(b - 1 for b in best) + 1


def _monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def minimalize(exps) -> frozenset:
    exps = sorted(set(exps), key=sum)
    out: list = []
    for e in exps:
        if not any(monomial_divides(m, e) for m in out):
            out.append(e)
    return frozenset(out)


def standard_basis(I: Ideal | Sequence[Polynomial], order: MonomialOrder = LOCAL,
                   use_corner: bool = True) -> StandardBasis:
    """Standard basis by Buchberger's loop with Mora normal forms.

    Pairs are processed smallest lcm degree first (ties by index), skipping
    pairs with coprime leading monomials and pairs made redundant by the chain
    criterion.  New elements are made primitive.
    """
    if not isinstance(I, Ideal):
        I = Ideal(I)
    n = I.n
    key = order.key
    local = order.is_local
    corner: Optional[int] = None

    G: list = []
    active: list = []
    pairs: set = set()

    def nf(terms):
        reducers = [G[i] for i in active]
        if local:
            return _mora_nf_terms(terms, reducers, key, corner)
        return _global_nf_terms(terms, reducers, key)

    def insert(terms):
        nonlocal corner
        el = _Elem(terms, key)
        idx = len(G)
        G.append(el)
        for j in active:
            pairs.add((j, idx))
        active.append(idx)
        if local and use_corner:
            d = _pure_power_corner([G[i].lm for i in active], n)
            if d is not None and (corner is None or d < corner):
                _apply_corner(d)

    def _apply_corner(d):
        nonlocal corner
        corner = d
        keep = []
        for i in active:
            el = G[i]
            if el.lmdeg >= d:
                continue
            t = _truncate(el.terms, d)
            if len(t) != len(el.terms):
                G[i] = _Elem(_content_divide(t), key)
            keep.append(i)
        dropped = set(active) - set(keep)
        active[:] = keep
        for p in list(pairs):
            if p[0] in dropped or p[1] in dropped:
                pairs.discard(p)
        leads = [G[i].lm for i in active]
        for e in _monomials_of_degree(n, d):
            if not any(monomial_divides(m, e) for m in leads):
                idx = len(G)
                G.append(_Elem({e: 1}, key))
                for j in active:
                    pairs.add((j, idx))
                active.append(idx)
                leads.append(e)

    for g in I.gens:
        t = nf(_as_int_terms(g))
        if t:
            insert(t)

    done: set = set()
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(monomial_lcm(G[p[0]].lm, G[p[1]].lm)), p[1], p[0]))
        pairs.discard((i, j))
        done.add((i, j))
        if i not in active or j not in active:
            continue
        a, b = G[i], G[j]
        lcm = monomial_lcm(a.lm, b.lm)
        if all(x == 0 or y == 0 for x, y in zip(a.lm, b.lm)):
            continue
        if _chain_redundant(i, j, lcm, G, active, pairs):
            continue
        s = _spoly(a, b, lcm, corner)
        if not s:
            continue
        h = nf(s)
        if h:
            insert(h)

    basis_elems = [G[i] for i in active]
    leads = minimalize(el.lm for el in basis_elems)
    return StandardBasis(
        ord=order,
        n=n,
        basis=[_to_poly(el.terms, n) for el in basis_elems],
        lead_exponents=leads,
        corner=corner,
        _elems=basis_elems,
    )


def _chain_redundant(i, j, lcm, G, active, pairs) -> bool:
    for k in active:
        if k == i or k == j:
            continue
        if not monomial_divides(G[k].lm, lcm):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def _spoly(a: _Elem, b: _Elem, lcm, corner) -> dict:
    sa = tuple(x - y for x, y in zip(lcm, a.lm))
    sb = tuple(x - y for x, y in zip(lcm, b.lm))
    d = math.gcd(a.lc, b.lc)
    ca, cb = b.lc // d, a.lc // d
    out: dict = {}
    for e, c in a.terms.items():
        e2 = tuple(x + y for x, y in zip(e, sa))
        out[e2] = ca * c
    for e, c in b.terms.items():
        e2 = tuple(x + y for x, y in zip(e, sb))
        v = out.get(e2, 0) - cb * c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    out = _truncate(out, corner)
    return _content_divide(out) if out else out


def spoly(p: Polynomial, q: Polynomial, order: MonomialOrder = LOCAL) -> Polynomial:
    key = order.key
    a = _Elem(_as_int_terms(p), key)
    b = _Elem(_as_int_terms(q), key)
    out = _spoly(a, b, monomial_lcm(a.lm, b.lm), None)
    return _to_poly(out, p.n) if out else Polynomial.zero(p.n)


def staircase_of(leads, n: int, max_dim: Optional[int] = None) -> Staircase:
    """Monomials outside the monomial ideal generated by ``leads``."""
    leads = list(leads)
    if max_dim is None:
        max_dim = max_dim_from_env()
    finite = _pure_power_corner(leads, n) is not None
    if not finite:
        return Staircase((), False)
    zero = (0,) * n
    if any(monomial_divides(m, zero) for m in leads):
        return Staircase((), True)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f in seen or any(monomial_divides(m, f) for m in leads):
                    continue
                seen.add(f)
                nxt.append(f)
                if len(seen) > max_dim:
                    raise StaircaseTooLarge(
                        f"staircase exceeds {max_dim} monomials (set GERMLAB_MAX_DIM to raise the cap)")
        frontier = nxt
    return Staircase(tuple(sorted(seen, key=LOCAL.key, reverse=True)), True)


def staircase(sb: StandardBasis, max_dim: Optional[int] = None) -> Staircase:
    return sb.staircase(max_dim)


def quotient_dim(I: Ideal | Sequence[Polynomial], max_dim: Optional[int] = None):
    """``dim_Q`` of the local quotient ring, or ``INFINITE``."""
    sb = standard_basis(I, LOCAL)
    return sb.staircase(max_dim).size


def membership(g: Polynomial, sb: StandardBasis) -> bool:
    return sb.contains(g)


__all__ = [
    "GLOBAL",
    "INFINITE",
    "LOCAL",
    "Ideal",
    "Staircase",
    "StaircaseTooLarge",
    "StandardBasis",
    "ecart",
    "membership",
    "minimalize",
    "mora_normal_form",
    "quotient_dim",
    "spoly",
    "standard_basis",
    "staircase",
    "staircase_of",
]
