from fractions import Fraction

import pytest

from germlab.milnor import (
    MilnorAlgebra,
    NotIsolated,
    SmoothGerm,
    equality_case,
    filtration_profile,
    kernel_dim,
    milnor_number,
    mult_operator,
    power_membership,
    tjurina_number,
    verify_theorem,
)
from germlab.oracle import oracle_dim
from germlab.parsing import parse_poly

XY = ["x", "y"]
XYZ = ["x", "y", "z"]
MALGRANGE2 = parse_poly("(x*y)^2 + x^6 + y^6", XY)
MALGRANGE3 = parse_poly("(x*y*z)^2 + x^8 + y^8 + z^8", XYZ)


def test_milnor_number_examples():
    assert milnor_number(parse_poly("x^2 + y^2 + z^2", XYZ)) == 1
    assert milnor_number(parse_poly("x^3 + y^3 + z^3", XYZ)) == 8
    for p, q in [(2, 3), (3, 5), (4, 4)]:
        assert milnor_number(parse_poly(f"x^{p} + y^{q}", XY)) == (p - 1) * (q - 1)


def test_tjurina_number_examples():
    assert tjurina_number(parse_poly("x^3 + y^3 + z^3", XYZ)) == 8
    assert tjurina_number(parse_poly("x^2 + y^2", XY)) == 1


def test_malgrange2_tau_fixed_by_oracle():
    jac = MALGRANGE2.gradient()
    mu_oracle = oracle_dim(jac)
    tau_oracle = oracle_dim(jac + [MALGRANGE2])
    assert (mu_oracle, tau_oracle) == (13, 12)
    assert milnor_number(MALGRANGE2) == mu_oracle
    assert tjurina_number(MALGRANGE2) == tau_oracle


def test_errors():
    with pytest.raises(SmoothGerm):
        milnor_number(parse_poly("x + y^2", XY))
    with pytest.raises(NotIsolated):
        milnor_number(parse_poly("x^2", XY))
    with pytest.raises(NotIsolated):
        tjurina_number(parse_poly("x^2*y^2", XY))
    with pytest.raises(ValueError):
        milnor_number(parse_poly("x^2 + 1", XY))


def test_operator_examples():
    assert mult_operator(MilnorAlgebra(parse_poly("x^2 + y^2", XY))).A.to_dense() == [[0]]
    assert mult_operator(MilnorAlgebra(parse_poly("x^4 + y^4 + z^4", XYZ))).is_zero()
    A = mult_operator(MilnorAlgebra(MALGRANGE2))
    assert not A.is_zero()
    assert A.power(2).is_zero()


def test_kernel_dim_examples():
    alg = MilnorAlgebra(parse_poly("x^3 + y^3 + z^3", XYZ))
    assert kernel_dim(alg.operator) == alg.mu == alg.tau
    assert kernel_dim(MilnorAlgebra(parse_poly("x^2 + y^2", XY)).operator) == 1
    alg = MilnorAlgebra(MALGRANGE2)
    assert kernel_dim(alg.operator) == tjurina_number(MALGRANGE2)


def test_filtration_examples():
    alg = MilnorAlgebra(parse_poly("x^3 + y^3 + z^3", XYZ))
    assert filtration_profile(alg.operator, 3, alg.tau).d == (0, 0)
    alg = MilnorAlgebra(MALGRANGE2)
    prof = filtration_profile(alg.operator, 2, alg.tau)
    assert prof.d == (alg.mu - alg.tau,) and prof.d[0] > 0
    alg = MilnorAlgebra(parse_poly("x^6", ["x"]))
    prof = filtration_profile(alg.operator, 1, alg.tau)
    assert prof.d == () and alg.mu == alg.tau == 5


def test_verify_theorem_examples():
    chk = verify_theorem(parse_poly("x^3 + y^3 + z^3", XYZ))
    assert chk.theorem_ok and chk.ratio == 1
    chk = verify_theorem(MALGRANGE2)
    assert chk.theorem_ok and chk.ratio < Fraction(3, 2)


def test_equality_case_examples():
    assert not equality_case(parse_poly("x^3 + y^3 + z^3", XYZ))
    assert equality_case(parse_poly("x^7", ["x"]))
    assert not equality_case(MALGRANGE2)


def test_power_membership_examples():
    assert power_membership(MALGRANGE2, 2)
    assert not power_membership(MALGRANGE2, 1)
    assert power_membership(MALGRANGE3, 3)
    assert not power_membership(MALGRANGE3, 2)
    assert power_membership(parse_poly("x^3 + y^4 + x^2*y^2", XY), 2)


def test_power_routes_agree(corpus_polys):
    """A^k applied to the class of 1 equals the class of f^k."""
    for spec, f in corpus_polys:
        alg = MilnorAlgebra(f)
        if alg.mu > 60:
            continue
        A = alg.operator
        one = alg.coordinates(f ** 0)
        assert one == {0: 1}
        for k in range(1, f.n + 2):
            via_operator = A.power(k).apply(one)
            via_nf = alg.coordinates(f ** k)
            assert via_operator == via_nf, (spec.name, k)
            assert (not via_nf) == alg.power_membership(k), (spec.name, k)


def test_invariants_on_corpus(corpus_polys):
    for spec, f in corpus_polys:
        alg = MilnorAlgebra(f)
        A = alg.operator
        n = f.n
        tau = alg.tau
        ranks = [A.rank_of_power(i) for i in range(n + 1)]
        assert ranks[n] == 0 and A.power(n).is_zero()
        assert all(a >= b for a, b in zip(ranks, ranks[1:]))
        assert A.kernel_dim() == alg.mu - ranks[1] == tau
        d = [ranks[i] - ranks[i + 1] for i in range(1, n)]
        assert alg.mu == tau + sum(d)
        assert all(di <= tau for di in d)
        assert all(a >= b for a, b in zip(d, d[1:]))
        for i in range(1, n):
            assert A.kernel_image_intersection_dim(i) == d[i - 1]
        assert alg.mu <= n * tau
        assert (alg.mu == tau) == alg.power_membership(1) == A.is_zero(), spec.name
