"""Sectional Milnor numbers and the multiplicity bounds.

``mu^i`` is the Milnor number of ``f`` restricted to a generic ``i``-plane
through the origin.  Genericity is approximated by random integer planes.  A
special plane can only raise the Milnor number (upper semicontinuity), so the
minimum over independent draws is taken; more samples lower the chance of
reporting a non-generic value, but no draw count certifies genericity.

Each sample draws from its own generator seeded by ``(seed, i, sample)``, so
results do not depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from germlab.linalg import rank
from germlab.milnor import ConsistencyError, MilnorAlgebra, NotIsolated, SmoothGerm, check_germ
from germlab.polyring import Polynomial
from germlab.standard_basis import quotient_dim

RETRY_BUDGET = 10


class SectionRetryExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SectionPlan:
    samples: int = 3
    seed: int = 42
    coeff_bound: int = 20

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")


@dataclass(frozen=True)
class SectionalProfile:
    mu_i: tuple
    log_convex: bool
    m: int

    def to_dict(self) -> dict:
        return {"mu_i": list(self.mu_i), "log_convex": self.log_convex, "m": self.m}


def _draw_plane(rng: np.random.Generator, n: int, i: int, bound: int) -> list:
    # nonzero integers in [-bound, bound]
    mags = rng.integers(1, bound + 1, size=(n, i))
    signs = rng.choice([-1, 1], size=(n, i))
    return (mags * signs).tolist()


def generic_section(f: Polynomial, i: int, rng: np.random.Generator, coeff_bound: int = 20) -> Polynomial:
    """``f`` composed with a random full-rank linear map from ``Q^i`` to ``Q^n``."""
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"section dimension {i} out of range 1..{n}")
    for _ in range(RETRY_BUDGET):
        mat = _draw_plane(rng, n, i, coeff_bound)
        if rank(mat) < i:
            continue
        images = []
        for row in mat:
            images.append(Polynomial({tuple(int(k == j) for k in range(i)): c
                                      for j, c in enumerate(row)}, i))
        return f.substitute(images)
    raise SectionRetryExhausted("could not draw a full-rank plane")


def _section_mu(g: Polynomial) -> int:
    try:
        return MilnorAlgebra(g).mu
    except SmoothGerm:
        return 0


def sectional_milnor(f: Polynomial, i: int, plan: SectionPlan = SectionPlan(),
                     mu: Optional[int] = None) -> int:
    """``mu^i``: the minimum Milnor number over ``plan.samples`` random sections."""
    check_germ(f)
    n = f.n
    if i == 0:
        return 1
    if i == n:
        return MilnorAlgebra(f).mu if mu is None else mu
    best = None
    for k in range(plan.samples):
        rng = np.random.default_rng([plan.seed & (2 ** 64 - 1), i, k])
        for _ in range(RETRY_BUDGET):
            g = generic_section(f, i, rng, plan.coeff_bound)
            try:
                value = _section_mu(g)
            except NotIsolated:
                continue
            break
        else:
            raise SectionRetryExhausted(f"no isolated {i}-dimensional section after {RETRY_BUDGET} draws")
        best = value if best is None else min(best, value)
    if i == 1 and best != f.order() - 1:
        raise ConsistencyError(f"mu^1 = {best} but the multiplicity is {f.order()}")
    return best


def log_convexity_check(mu_i) -> bool:
    """``(mu^i)^2 <= mu^(i-1) mu^(i+1)`` for all interior ``i``."""
    seq = list(mu_i.mu_i if isinstance(mu_i, SectionalProfile) else mu_i)
    if any(v < 1 for v in seq):
        raise ValueError("log-convexity needs positive terms")
    return all(seq[k] ** 2 <= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


def sectional_profile(f: Polynomial, plan: SectionPlan = SectionPlan(),
                      mu: Optional[int] = None) -> SectionalProfile:
    m = f.order()
    if m < 2:
        raise SmoothGerm("sectional Milnor numbers need a singular germ")
    if mu is None:
        mu = MilnorAlgebra(f).mu
    seq = tuple(sectional_milnor(f, i, plan, mu) for i in range(f.n + 1))
    return SectionalProfile(seq, log_convexity_check(seq), m)


def multiplicity_bounds(f: Polynomial, mu: int, tau: int) -> dict:
    """``mu >= (m-1)^n`` and ``tau >= (m-1)^n / n`` in exact arithmetic."""
    m = f.order()
    if m == 1:
        raise SmoothGerm("multiplicity 1: smooth germ")
    n = f.n
    power = (m - 1) ** n
    return {
        "m": m,
        "mu_ge_pow": mu >= power,
        "mu_eq_pow": mu == power,
        "tau_ge_pow_over_n": Fraction(tau) >= Fraction(power, n),
        "tau_gt_pow_over_n": Fraction(tau) > Fraction(power, n),
    }


def semi_homogeneous_check(f: Polynomial, mu: Optional[int] = None) -> bool:
    """Whether the lowest-degree form of ``f`` has an isolated singularity.

    In the given coordinates only.  When it does, ``mu(f) = (m-1)^n`` is
    asserted.
    """
    m = f.order()
    if m < 2:
        raise SmoothGerm("multiplicity 1: smooth germ")
    lowest = f.homogeneous_part(m)
    grad = [g for g in lowest.gradient() if not g.is_zero()]
    if not grad or quotient_dim(grad) == float("inf"):
        return False
    mu = MilnorAlgebra(f).mu if mu is None else mu
    if mu != (m - 1) ** f.n:
        raise ConsistencyError(f"semi-homogeneous germ with mu = {mu} != (m-1)^n = {(m - 1) ** f.n}")
    return True
