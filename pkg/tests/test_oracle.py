from hypothesis import given, settings, strategies as st

from germlab.oracle import INFINITE_SUSPECTED, oracle_dim, truncated_dim, truncation
from germlab.parsing import parse_poly
from germlab.standard_basis import quotient_dim

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def gens(src, variables=XY):
    return [parse_poly(g, variables) for g in src.split(";")]


def test_examples():
    assert truncated_dim(gens("x; y"), 3) == 1
    assert truncated_dim(gens("x^2; y^2"), 5) == 4
    assert oracle_dim(gens("x*y")) == INFINITE_SUSPECTED


def test_truncated_dim_nondecreasing_and_stabilizes():
    I = gens("x^3 + y^2; x*y^3", XY)
    seq = [truncated_dim(I, D) for D in range(1, 12)]
    assert all(a <= b for a, b in zip(seq, seq[1:]))
    assert seq[-1] == seq[-2] == oracle_dim(I)


def test_truncation_result():
    r = truncation(gens("x^2; y^3"), 6)
    assert r.stable and r.dim_at_cap == 6
    r = truncation(gens("x^2; y^3"), 2)
    assert not r.stable


def test_certificate_checked_not_trusted():
    I = gens("x^4; y^4")
    assert oracle_dim(I, certificate=7) == 16
    assert oracle_dim(I, certificate=2) == 16


def test_unit_ideal():
    assert oracle_dim(gens("1 + x; y")) == 0


monomial_ideals = st.lists(
    st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5), monomial_ideals)
def test_agrees_with_standard_basis_on_monomial_ideals(a, b, c, extra):
    I = gens(f"x^{a}; y^{b}; z^{c}", XYZ)
    I += [parse_poly(f"x^{p}*y^{q}*z^{r}", XYZ) for p, q, r in extra if p + q + r > 0]
    assert oracle_dim(I) == quotient_dim(I)


def test_fermat_and_morse_jacobians():
    f = parse_poly("x^3 + y^3 + z^3", XYZ)
    assert oracle_dim(f.gradient()) == 8
    g = parse_poly("x^2 + y^2 + z^2", XYZ)
    assert truncated_dim(g.gradient(), 2) == truncated_dim(g.gradient(), 3) == 1
