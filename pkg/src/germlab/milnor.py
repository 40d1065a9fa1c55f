"""Milnor and Tjurina algebras and the multiplication-by-f operator.

The Milnor algebra ``M_f = O/J_f`` has the staircase of a local standard
basis of the Jacobian ideal as a monomial basis.  Multiplication by ``f`` is
an endomorphism ``A`` of ``M_f`` whose cokernel is the Tjurina algebra
``T_f = O/(J_f, f)``; hence ``dim ker A = mu - rank A = tau``.  Since
``f^n`` lies in ``J_f`` (Briancon-Skoda), ``A^n = 0`` and the chain of
ideals ``(f^i)`` in ``M_f`` is the chain of images of ``A^i``.  Its graded
pieces have dimensions ``d_i = rank A^i - rank A^(i+1)``, and restricting
``A`` to ``im A^i`` shows ``d_i = dim(ker A ∩ im A^i) <= tau``.  Summing gives
``mu = tau + d_1 + ... + d_(n-1) <= n * tau``.

All of this is checked here by exact linear algebra on the staircase basis
rather than by colon ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from germlab import linalg
from germlab.polyring import Polynomial
from germlab.standard_basis import LOCAL, Staircase, StandardBasis, standard_basis


class GermError(ValueError):
    status = "INPUT_ERROR"


class NotIsolated(GermError):
    status = "NOT_ISOLATED"


class SmoothGerm(GermError):
    status = "SMOOTH"


class ConsistencyError(AssertionError):
    """An identity that must hold for every isolated singularity failed."""


def check_germ(f: Polynomial) -> None:
    if f.is_zero():
        raise GermError("the zero polynomial is not an isolated singularity")
    if f.constant_term() != 0:
        raise GermError("germ must vanish at the origin")


class MilnorAlgebra:
    """``M_f`` with its monomial basis; raises for smooth or non-isolated germs."""

    def __init__(self, f: Polynomial, max_dim: Optional[int] = None):
        check_germ(f)
        if f.order() == 1:
            raise SmoothGerm("f has a nonzero linear part: smooth at the origin, mu = tau = 0")
        self.f = f
        self.n = f.n
        self.jacobian_sb: StandardBasis = standard_basis(f.gradient(), LOCAL)
        self.basis: Staircase = self.jacobian_sb.staircase(max_dim)
        if not self.basis.finite:
            raise NotIsolated("Jacobian ideal has infinite colength: singularity is not isolated")
        self.mu = len(self.basis)
        self.index = {e: j for j, e in enumerate(self.basis.monomials)}

    def coordinates(self, g: Polynomial) -> dict:
        """Class of ``g`` in ``M_f`` as a sparse vector over the basis indices."""
        coords = self.jacobian_sb.reduced_coordinates(g)
        return {self.index[e]: c for e, c in coords.items()}

    def contains(self, g: Polynomial) -> bool:
        return self.jacobian_sb.contains(g)

    def power_membership(self, k: int) -> bool:
        return self.contains(self.f ** k)

    @cached_property
    def operator(self) -> "MultOperator":
        return MultOperator.of(self)

    @cached_property
    def tau(self) -> int:
        return tjurina_number(self.f)


@dataclass(frozen=True)
class FiltrationProfile:
    d: tuple
    tau: int
    mu: int


class MultOperator:
    """Matrix of multiplication by ``f`` on the staircase basis of ``M_f``."""

    def __init__(self, A: linalg.SparseMatrix, n: int):
        self.A = A
        self.n = n
        self.mu = A.ncols
        self._powers = [linalg.SparseMatrix.identity(self.mu), A]
        if not self.power(n).is_zero():
            raise ConsistencyError("A^n != 0: multiplication by f is not nilpotent of order n")

    @classmethod
    def of(cls, alg: MilnorAlgebra) -> "MultOperator":
        cols = [alg.coordinates(alg.f * Polynomial.monomial(b)) for b in alg.basis.monomials]
        return cls(linalg.SparseMatrix(alg.mu, alg.mu, cols), alg.n)

    def power(self, k: int) -> linalg.SparseMatrix:
        while len(self._powers) <= k:
            self._powers.append(self.A @ self._powers[-1])
        return self._powers[k]

    @cached_property
    def _ranks(self) -> list:
        return [self.power(i).rank() for i in range(self.n + 1)]

    def rank_of_power(self, k: int) -> int:
        if k <= self.n:
            return self._ranks[k]
        return 0

    def is_zero(self) -> bool:
        return self.A.is_zero()

    @cached_property
    def kernel(self) -> list:
        return self.A.nullspace()

    def kernel_dim(self) -> int:
        return self.mu - self.rank_of_power(1)

    def kernel_image_intersection_dim(self, i: int) -> int:
        """``dim(ker A ∩ im A^i)`` computed directly from subspace bases."""
        K = self.kernel
        img = self.power(i).cols
        return len(K) + self.power(i).rank() - linalg.rank(list(K) + list(img))


def milnor_algebra(f: Polynomial) -> MilnorAlgebra:
    return MilnorAlgebra(f)


def milnor_number(f: Polynomial) -> int:
    return MilnorAlgebra(f).mu


def tjurina_number(f: Polynomial) -> int:
    check_germ(f)
    if f.order() == 1:
        raise SmoothGerm("f is smooth at the origin")
    sb = standard_basis(f.gradient() + [f], LOCAL)
    st = sb.staircase()
    jac = standard_basis(f.gradient(), LOCAL).staircase()
    if st.finite != jac.finite:
        raise ConsistencyError("mu and tau disagree on finiteness")
    if not st.finite:
        raise NotIsolated("Tjurina ideal has infinite colength")
    return len(st)


def mult_operator(alg: MilnorAlgebra) -> MultOperator:
    return alg.operator


def kernel_dim(A: MultOperator) -> int:
    return A.kernel_dim()


def filtration_profile(A: MultOperator, n: int, tau: int) -> FiltrationProfile:
    """Dimensions ``d_i`` of ``(f^i)/(f^(i+1))`` for ``i = 1 .. n-1``."""
    d = []
    for i in range(1, n):
        di = A.rank_of_power(i) - A.rank_of_power(i + 1)
        direct = A.kernel_image_intersection_dim(i)
        if di != direct:
            raise ConsistencyError(f"d_{i} = {di} but dim(ker A ∩ im A^{i}) = {direct}")
        d.append(di)
    return FiltrationProfile(tuple(d), tau, A.mu)


@dataclass(frozen=True)
class TheoremCheck:
    mu: int
    tau: int
    n: int
    ratio: Fraction
    profile: FiltrationProfile
    kernel_dim: int
    bound_ok: bool
    decomposition_ok: bool
    pieces_bounded: bool
    pieces_nonincreasing: bool
    kernel_ok: bool
    equality_case: bool

    @property
    def theorem_ok(self) -> bool:
        return (self.bound_ok and self.decomposition_ok and self.pieces_bounded
                and self.pieces_nonincreasing and self.kernel_ok)


def verify_theorem(f: Polynomial, alg: Optional[MilnorAlgebra] = None,
                   tau: Optional[int] = None) -> TheoremCheck:
    """Check ``mu <= n tau`` together with the filtration decomposition."""
    alg = alg or MilnorAlgebra(f)
    tau = alg.tau if tau is None else tau
    if tau == 0:
        raise SmoothGerm("tau = 0")
    A = alg.operator
    n = alg.n
    profile = filtration_profile(A, n, tau)
    kd = A.kernel_dim()
    mu = alg.mu
    eq = _equality_case(A, n, mu, tau)
    return TheoremCheck(
        mu=mu,
        tau=tau,
        n=n,
        ratio=Fraction(mu, tau),
        profile=profile,
        kernel_dim=kd,
        bound_ok=mu <= n * tau,
        decomposition_ok=mu == tau + sum(profile.d),
        pieces_bounded=all(di <= tau for di in profile.d),
        pieces_nonincreasing=all(a >= b for a, b in zip(profile.d, profile.d[1:])),
        kernel_ok=kd == tau,
        equality_case=eq,
    )


def _equality_case(A: MultOperator, n: int, mu: int, tau: int) -> bool:
    # im A^(n-1) ⊆ ker A because A^n = 0, so equal dimensions mean equality
    by_operator = A.rank_of_power(n - 1) == A.kernel_dim()
    by_numbers = mu == n * tau
    if by_operator != by_numbers:
        raise ConsistencyError("ker(f) = (f^(n-1)) disagrees with mu = n tau")
    return by_operator


def equality_case(f: Polynomial, alg: Optional[MilnorAlgebra] = None) -> bool:
    """Whether ``ker(f) = (f^(n-1))`` in ``M_f``, i.e. ``mu = n tau``."""
    alg = alg or MilnorAlgebra(f)
    return _equality_case(alg.operator, alg.n, alg.mu, alg.tau)


def power_membership(f: Polynomial, k: int, alg: Optional[MilnorAlgebra] = None) -> bool:
    """Whether ``f^k`` lies in the Jacobian ideal."""
    alg = alg or MilnorAlgebra(f)
    return alg.power_membership(k)


def saito_membership(f: Polynomial, alg: Optional[MilnorAlgebra] = None) -> bool:
    return power_membership(f, 1, alg)
