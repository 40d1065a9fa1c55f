"""Newton polyhedra, under-diagram volumes and Kouchnirenko's Newton number.

For a convenient support the region between the origin and the Newton
diagram is not convex, but its complement inside the box ``[0, M]^q`` is the
convex body ``Γ₊ ∩ [0, M]^q``.  Its vertices are among the support points with
any subset of coordinates replaced by ``M`` (``M`` exceeds every support
coordinate, so only the unbounded edges ``v + t e_i`` reach the box walls).

Convex hull volumes are exact: facets are found by brute force over all
``q``-subsets of candidate points (vectorised with integer numpy arrays), and
the body is triangulated by pulling from its lexicographically smallest
vertex, recursing into each facet not containing it.  The brute force is
``O(C(N, q) * N)`` for ``N`` candidates; it is meant for ``q <= 4`` and at
most ``MAX_CANDIDATES`` points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from germlab.polyring import Polynomial

MAX_CANDIDATES = 200
MAX_DIMENSION = 6
_CHUNK = 200_000


class NotConvenient(ValueError):
    def __init__(self, missing: Sequence[int], message: Optional[str] = None):
        self.missing = tuple(missing)
        super().__init__(message or f"support has no pure power of variable(s) {self.missing}")


class PolytopeTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class SupportSet:
    points: frozenset
    n: int

    @classmethod
    def of(cls, f: Polynomial) -> "SupportSet":
        return cls(f.support(), f.n)

    def restrict(self, coords: Sequence[int]) -> "SupportSet":
        """Points lying in the coordinate subspace ``coords``, in those coordinates."""
        coords = tuple(coords)
        rest = [i for i in range(self.n) if i not in coords]
        pts = frozenset(tuple(p[i] for i in coords) for p in self.points
                        if all(p[j] == 0 for j in rest))
        return SupportSet(pts, len(coords))

    def missing_axes(self) -> list:
        found = set()
        for p in self.points:
            nz = [i for i, a in enumerate(p) if a]
            if len(nz) == 1:
                found.add(nz[0])
        return [i for i in range(self.n) if i not in found]

    def pareto_minimal(self) -> list:
        pts = sorted(self.points, key=sum)
        out: list = []
        for p in pts:
            if not any(all(a <= b for a, b in zip(q, p)) for q in out):
                out.append(p)
        return sorted(out)


def is_convenient(supp: SupportSet) -> bool:
    return not supp.missing_axes()


# --- exact convex hull machinery -----------------------------------------------


def _det_batch(M: np.ndarray) -> np.ndarray:
    """Integer determinants of a stack of k x k matrices, k <= 3."""
    k = M.shape[-1]
    if k == 0:
        return np.ones(M.shape[0], dtype=M.dtype)
    if k == 1:
        return M[:, 0, 0]
    if k == 2:
        return M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
    if k == 3:
        return (M[:, 0, 0] * (M[:, 1, 1] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 1])
                - M[:, 0, 1] * (M[:, 1, 0] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 0])
                + M[:, 0, 2] * (M[:, 1, 0] * M[:, 2, 1] - M[:, 1, 1] * M[:, 2, 0]))
    # cofactor expansion along the first row
    total = np.zeros(M.shape[0], dtype=M.dtype)
    for j in range(k):
        minor = np.delete(np.delete(M, 0, axis=1), j, axis=2)
        total = total + (-1) ** j * M[:, 0, j] * _det_batch(minor)
    return total


def _det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (Bareiss)."""
    a = [list(map(int, r)) for r in rows]
    k = len(a)
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1] if k else 1


def facets(points: Sequence[tuple]) -> list:
    """Facets of the convex hull of full-dimensional integer ``points``.

    Returns ``(normal, offset, members)`` with primitive inward normal, i.e.
    ``normal . p >= offset`` for all points, equality exactly on ``members``.
    """
    pts = sorted(set(map(tuple, points)))
    d = len(pts[0])
    N = len(pts)
    if N > MAX_CANDIDATES:
        raise PolytopeTooLarge(f"{N} candidate points exceed the limit {MAX_CANDIDATES}")
    if d > MAX_DIMENSION:
        raise PolytopeTooLarge(f"dimension {d} exceeds the limit {MAX_DIMENSION}")
    P = np.array(pts, dtype=np.int64)
    bound = int(np.abs(P).max(initial=0)) + 1
    if math.factorial(d) * (2 * bound) ** d * d >= 2 ** 62:
        raise PolytopeTooLarge("coordinates too large for exact int64 facet search")
    found: dict = {}
    combo_iter = combinations(range(N), d)
    while True:
        chunk = np.array([c for _, c in zip(range(_CHUNK), combo_iter)], dtype=np.int64)
        if chunk.size == 0:
            break
        base = P[chunk[:, 0]]
        V = P[chunk[:, 1:]] - base[:, None, :]
        normals = np.empty((len(chunk), d), dtype=np.int64)
        for j in range(d):
            minor = np.delete(V, j, axis=2)
            normals[:, j] = (-1) ** j * _det_batch(minor)
        nonzero = np.any(normals != 0, axis=1)
        offs = np.einsum("kd,kd->k", normals, base)
        S = normals @ P.T - offs[:, None]
        pos = np.all(S >= 0, axis=1) & nonzero
        neg = np.all(S <= 0, axis=1) & nonzero
        for idx in np.nonzero(pos | neg)[0]:
            sgn = 1 if pos[idx] else -1
            nv = [int(x) * sgn for x in normals[idx]]
            g = 0
            for x in nv:
                g = math.gcd(g, x)
            nv = tuple(x // g for x in nv)
            off = sum(a * b for a, b in zip(nv, pts[int(chunk[idx, 0])]))
            if (nv, off) not in found:
                members = tuple(p for p in pts if sum(a * b for a, b in zip(nv, p)) == off)
                found[(nv, off)] = members
    return [(nv, off, members) for (nv, off), members in sorted(found.items())]


def triangulate(points: Sequence[tuple]) -> list:
    """Pulling triangulation of the hull of full-dimensional integer points."""
    pts = sorted(set(map(tuple, points)))
    d = len(pts[0])
    if d == 1:
        return [(pts[0], pts[-1])]
    apex = pts[0]
    out = []
    for normal, off, members in facets(pts):
        if sum(a * b for a, b in zip(normal, apex)) == off:
            continue
        j = next(i for i, a in enumerate(normal) if a)
        back = {p[:j] + p[j + 1:]: p for p in members}
        for simplex in triangulate(list(back)):
            out.append((apex,) + tuple(back[q] for q in simplex))
    return out


def simplex_volume(simplex: Sequence[tuple]) -> Fraction:
    apex = simplex[0]
    d = len(apex)
    rows = [[a - b for a, b in zip(p, apex)] for p in simplex[1:]]
    return Fraction(abs(_det(rows)), math.factorial(d))


def hull_volume(points: Iterable[tuple]) -> Fraction:
    """Exact volume of the convex hull; 0 when not full-dimensional."""
    pts = sorted(set(map(tuple, points)))
    if not pts:
        return Fraction(0)
    d = len(pts[0])
    if len(pts) <= d or _affine_rank(pts) < d:
        return Fraction(0)
    return sum((simplex_volume(s) for s in triangulate(pts)), Fraction(0))


def _affine_rank(pts) -> int:
    from germlab.linalg import rank

    p0 = pts[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in pts[1:]])


# --- Newton diagram -------------------------------------------------------------


def box_body_candidates(supp: SupportSet, M: int) -> list:
    """Candidate vertices of ``Γ₊ ∩ [0, M]^q``.

    A point ``q`` with ``q_j < M`` is dropped when some support point ``w``
    has ``w_j < q_j`` and ``w_k <= q_k`` elsewhere: then ``q ± ε e_j`` both lie
    in the body, so ``q`` is not a vertex.
    """
    pts = supp.pareto_minimal()
    n = supp.n
    cands = set()
    for p in pts:
        for r in range(n + 1):
            for T in combinations(range(n), r):
                q = list(p)
                for i in T:
                    q[i] = M
                cands.add(tuple(q))
    return sorted(q for q in cands if not _interior_along_axis(q, pts, M))


def _interior_along_axis(q, pts, M) -> bool:
    for j, qj in enumerate(q):
        if qj >= M:
            continue
        for w in pts:
            if w[j] < qj and all(w[k] <= q[k] for k in range(len(q)) if k != j):
                return True
    return False


def under_diagram_volume(supp: SupportSet, coords: Optional[Sequence[int]] = None) -> Fraction:
    """Volume of the region between the origin and the Newton diagram.

    ``coords`` selects a coordinate subspace (default: all coordinates); the
    support is restricted to it first and must be convenient there.
    """
    if coords is not None:
        supp = supp.restrict(coords)
    missing = supp.missing_axes()
    if missing:
        raise NotConvenient(missing)
    q = supp.n
    M = 1 + max(max(p) for p in supp.points)
    body = hull_volume(box_body_candidates(supp, M))
    return Fraction(M) ** q - body


def under_diagram_volume_by_cones(supp: SupportSet) -> Fraction:
    """Same volume as a sum of pyramids from the origin over compact facets."""
    missing = supp.missing_axes()
    if missing:
        raise NotConvenient(missing)
    pts = supp.pareto_minimal()
    d = supp.n
    if d == 1:
        return Fraction(pts[0][0])
    total = Fraction(0)
    seen = set()
    for combo in combinations(pts, d):
        normal = _hyperplane(combo)
        if normal is None:
            continue
        off = sum(a * b for a, b in zip(normal, combo[0]))
        if off < 0:
            normal = tuple(-a for a in normal)
            off = -off
        if not all(a > 0 for a in normal) or (normal, off) in seen:
            continue
        if all(sum(a * b for a, b in zip(normal, p)) >= off for p in pts):
            seen.add((normal, off))
            face = [p for p in pts if sum(a * b for a, b in zip(normal, p)) == off]
            total += hull_volume([(0,) * d] + face)
    return total


def _hyperplane(combo) -> Optional[tuple]:
    d = len(combo[0])
    V = [[a - b for a, b in zip(p, combo[0])] for p in combo[1:]]
    normal = []
    for j in range(d):
        minor = [row[:j] + row[j + 1:] for row in V]
        normal.append((-1) ** j * _det(minor) if minor else 1)
    if not any(normal):
        return None
    g = 0
    for x in normal:
        g = math.gcd(g, x)
    return tuple(x // g for x in normal)


@dataclass(frozen=True)
class NewtonData:
    convenient: bool
    volumes: dict  # q -> V_q
    nu: Optional[int]

    def to_dict(self) -> dict:
        return {"convenient": self.convenient, "volumes": {str(q): v for q, v in self.volumes.items()},
                "nu": self.nu}


def newton_data(f: Polynomial) -> NewtonData:
    supp = SupportSet.of(f)
    if not is_convenient(supp):
        return NewtonData(False, {}, None)
    n = f.n
    volumes = {}
    for q in range(1, n + 1):
        vq = Fraction(0)
        for coords in combinations(range(n), q):
            vq += under_diagram_volume(supp, coords)
        if (math.factorial(q) * vq).denominator != 1:
            raise ArithmeticError(f"{q}! V_{q} = {math.factorial(q) * vq} is not an integer")
        volumes[q] = vq
    nu = Fraction((-1) ** n)
    for q in range(1, n + 1):
        nu += (-1) ** (n - q) * math.factorial(q) * volumes[q]
    if nu.denominator != 1:
        raise ArithmeticError(f"Newton number {nu} is not an integer")
    return NewtonData(True, volumes, int(nu))


def newton_number(f: Polynomial) -> int:
    """``n! V_n - (n-1)! V_(n-1) + ... + (-1)^(n-1) V_1 + (-1)^n``."""
    supp = SupportSet.of(f)
    missing = supp.missing_axes()
    if missing:
        raise NotConvenient(missing)
    return newton_data(f).nu


def kushnirenko_report(f: Polynomial, mu: int, tau: int, data: Optional[NewtonData] = None) -> dict:
    """Compare ``mu`` and ``tau`` with the Newton number.

    ``mu_eq_nu`` is evidence of Newton non-degeneracy only; it is not checked.
    """
    data = data or newton_data(f)
    if not data.convenient:
        raise NotConvenient(SupportSet.of(f).missing_axes())
    nu = data.nu
    return {
        "nu": nu,
        "mu_ge_nu": mu >= nu,
        "mu_eq_nu": mu == nu,
        "tau_ge_nu_over_n": Fraction(tau) >= Fraction(nu, f.n),
    }
