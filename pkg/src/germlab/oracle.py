"""Brute-force colength oracle by truncated linear algebra.

``dim O/(I + m^D)`` is computed directly: the quotient is spanned by the
monomials of degree ``< D`` and the relations are the truncations of
``x^a * g`` for every generator ``g``.  This never touches the standard basis
code.

Stabilization is sound: ``O/(I + m^(D+1))`` surjects onto ``O/(I + m^D)``, so
equal dimensions force ``m^D ⊆ I + m^(D+1)`` and Nakayama's lemma gives
``m^D ⊆ I``; from then on the truncated dimension is the true colength.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Optional, Sequence

from germlab.linalg import Echelon
from germlab.polyring import Polynomial

INFINITE_SUSPECTED = "INFINITE-SUSPECTED"
MAX_COLUMNS = 20_000


class OracleResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class TruncationResult:
    degree_cap: int
    dim_at_cap: int
    stable: bool


def _monomials_below(n: int, D: int) -> list:
    out = []
    for d in range(D):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _count_below(n: int, D: int) -> int:
    # number of monomials of degree < D in n variables = C(D - 1 + n, n)
    return comb(D - 1 + n, n) if D > 0 else 0


def truncated_dim(gens: Sequence[Polynomial], D: int, max_columns: int = MAX_COLUMNS) -> int:
    """``dim O/(I + m^D)`` for the ideal generated by ``gens``."""
    if D < 1:
        raise ValueError("degree cap must be at least 1")
    gens = [g for g in gens if not g.is_zero()]
    n = gens[0].n
    if _count_below(n, D) > max_columns:
        raise OracleResourceLimit(f"{_count_below(n, D)} monomial columns exceed the cap {max_columns}")
    monos = _monomials_below(n, D)
    col = {e: k for k, e in enumerate(monos)}
    ech = Echelon()
    for g in gens:
        o = g.order()
        terms = list(g.items())
        for a in monos:
            da = sum(a)
            if da + o >= D:
                continue
            row = {}
            for e, c in terms:
                if da + sum(e) < D:
                    row[col[tuple(x + y for x, y in zip(a, e))]] = c
            ech.add(row)
    return len(monos) - len(ech)


def truncation(gens: Sequence[Polynomial], D: int) -> TruncationResult:
    a = truncated_dim(gens, D)
    b = truncated_dim(gens, D + 1)
    return TruncationResult(D, a, a == b)


def oracle_dim(gens: Sequence[Polynomial], certificate: Optional[int] = None,
               max_columns: int = MAX_COLUMNS):
    """Colength of the ideal, or ``INFINITE_SUSPECTED`` at the resource cap.

    ``certificate`` is a degree ``D`` believed to satisfy ``m^D ⊆ I`` (for
    example from a finite staircase); it is verified, not trusted.
    """
    gens = list(gens)
    caps = [certificate] if certificate else []
    D = 1
    while True:
        caps.append(D)
        D *= 2
        if D > 10_000:
            break
    for D in caps:
        try:
            res = _stable_at(gens, D, max_columns)
        except OracleResourceLimit:
            if certificate and D == certificate:
                continue
            return INFINITE_SUSPECTED
        if res is not None:
            return res
    return INFINITE_SUSPECTED


def _stable_at(gens, D, max_columns):
    a = truncated_dim(gens, D, max_columns)
    b = truncated_dim(gens, D + 1, max_columns)
    return a if a == b else None
