"""Exact sparse linear algebra over Q.

Vectors are dicts ``index -> nonzero rational``.  Matrices are stored by
columns, matching how the multiplication operator is assembled (column ``j``
is the normal form of ``f * b_j``).

Ranks use fraction-free elimination on primitive integer rows: each row is
scaled to coprime integers, a row is reduced against a pivot by integer
cross-multiplication, and the result is divided by its content again.  When
two rows compete for the same pivot column the one with the smaller leading
absolute value is kept as pivot.  Everything is deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


def _primitive(row: dict) -> dict:
    den = 1
    for c in row.values():
        if isinstance(c, Fraction) and c.denominator != 1:
            den = den * c.denominator // math.gcd(den, c.denominator)
    if den != 1:
        row = {k: int(c * den) for k, c in row.items()}
    else:
        row = {k: int(c) for k, c in row.items()}
    g = 0
    for c in row.values():
        g = math.gcd(g, c)
        if g == 1:
            return row
    return {k: c // g for k, c in row.items()}


def _eliminate(pivot: dict, row: dict, col) -> dict:
    """Integer combination of ``row`` and ``pivot`` killing ``row[col]``."""
    a = pivot[col]
    b = row[col]
    g = math.gcd(a, b)
    a //= g
    b //= g
    out = {k: a * c for k, c in row.items()}
    for k, c in pivot.items():
        v = out.get(k, 0) - b * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return _primitive(out) if out else out


class Echelon:
    """Incrementally maintained row echelon form; ``len(self)`` is the rank."""

    def __init__(self):
        self.pivots: dict = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = _primitive({k: v for k, v in row.items() if v})
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            row = _eliminate(piv, row, col)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = _primitive({k: v for k, v in row.items() if v})
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                self.pivots[col] = row
                return True
            if abs(row[col]) < abs(piv[col]):
                self.pivots[col], row = row, piv
                piv = self.pivots[col]
            row = _eliminate(piv, row, col)
        return False


def rank(vectors: Iterable) -> int:
    """Rank of a family of sparse vectors (dicts) or dense sequences."""
    ech = Echelon()
    for v in vectors:
        if not isinstance(v, dict):
            v = {i: c for i, c in enumerate(v) if c}
        ech.add(v)
    return len(ech)


class SparseMatrix:
    """Column-stored rational matrix with ``nrows x ncols`` shape."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict]):
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [dict((k, Fraction(v)) for k, v in c.items() if v) for c in cols]

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for j, x in vec.items():
            for i, a in self.cols[j].items():
                v = out.get(i, 0) + a * x
                if v:
                    out[i] = v
                else:
                    out.pop(i, None)
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def is_zero(self) -> bool:
        return not any(self.cols)

    def rows(self) -> list:
        out = [dict() for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def rank(self) -> int:
        return rank(self.cols)

    def nullspace(self) -> list:
        return nullspace(self.rows(), self.ncols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.cols == other.cols)


def rref(rows: Sequence[dict]) -> tuple:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    work = [{k: Fraction(v) for k, v in r.items() if v} for r in rows]
    pivots: dict = {}
    for r in work:
        # reduce r by the existing pivots
        for col in sorted(k for k in r if k in pivots):
            if col not in r:
                continue
            factor = r[col]
            for k, v in pivots[col].items():
                nv = r.get(k, 0) - factor * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        col = min(r)
        inv = 1 / r[col]
        new = {k: v * inv for k, v in r.items()}
        # clear the new pivot column from the older pivot rows
        for other in pivots.values():
            if col in other:
                factor = other[col]
                for k, v in new.items():
                    nv = other.get(k, 0) - factor * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        pivots[col] = new
    cols = sorted(pivots)
    return [pivots[c] for c in cols], cols


def nullspace(rows: Sequence[dict], ncols: int) -> list:
    """Basis of ``{v : M v = 0}`` as sparse vectors with rational entries."""
    reduced, pivcols = rref(rows)
    pivset = set(pivcols)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for r, pc in zip(reduced, pivcols):
            c = r.get(free)
            if c:
                v[pc] = -c
        basis.append(v)
    return basis
