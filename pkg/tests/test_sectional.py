from fractions import Fraction

import numpy as np
import pytest

from germlab.milnor import ConsistencyError, SmoothGerm, milnor_number
from germlab.parsing import parse_poly
from germlab.sectional import (
    SectionPlan,
    generic_section,
    log_convexity_check,
    multiplicity_bounds,
    sectional_milnor,
    sectional_profile,
    semi_homogeneous_check,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def test_fermat_profile():
    prof = sectional_profile(parse_poly("x^3 + y^3 + z^3", XYZ))
    assert prof.mu_i == (1, 2, 4, 8)
    assert prof.log_convex and prof.m == 3


def test_malgrange3_profile():
    f = parse_poly("(x*y*z)^2 + x^8 + y^8 + z^8", XYZ)
    prof = sectional_profile(f)
    assert prof.mu_i[0] == 1 and prof.mu_i[1] == 5 and prof.mu_i[3] == 215
    assert prof.log_convex


def test_plane_curve_profile():
    prof = sectional_profile(parse_poly("x^2 + y^3", XY))
    assert prof.mu_i == (1, 1, 2)


def test_generic_line_section_has_multiplicity_order():
    f = parse_poly("x^4 + y^5 + z^6 + x*y*z^2", XYZ)
    g = generic_section(f, 1, np.random.default_rng(0))
    assert g.n == 1 and g.order() == 4


def test_section_results_reproducible():
    f = parse_poly("x^3 + y^4 + z^5 + x*y*z", XYZ)
    plan = SectionPlan(samples=4, seed=7)
    assert sectional_profile(f, plan) == sectional_profile(f, plan)


def test_special_plane_is_not_reported():
    # the plane x = 0 gives y^3 + z^4 (mu = 6); a generic plane gives a
    # rank-one quadratic part plus a nonzero cubic, an A_2 curve
    f = parse_poly("x^2 + y^3 + z^4", XYZ)
    assert milnor_number(parse_poly("x^3 + y^4", XY)) == 6
    assert sectional_milnor(f, 2) == 2


def test_log_convexity_check():
    assert log_convexity_check([1, 2, 4, 8])
    assert log_convexity_check([1, 2, 5, 13])
    assert not log_convexity_check([1, 3, 4, 8])
    with pytest.raises(ValueError):
        log_convexity_check([1, 0, 1])


def test_multiplicity_bounds():
    b = multiplicity_bounds(parse_poly("x^3 + y^3 + z^3", XYZ), 8, 8)
    assert b["mu_eq_pow"] and b["tau_ge_pow_over_n"] and b["tau_gt_pow_over_n"]
    with pytest.raises(SmoothGerm):
        multiplicity_bounds(parse_poly("x + y^2", XY), 0, 0)


def test_semi_homogeneous_check():
    assert semi_homogeneous_check(parse_poly("x^3 + y^3 + x^2*y^2", XY))
    assert not semi_homogeneous_check(parse_poly("x^2 + y^3", XY))


def test_consistency_error_on_wrong_mu():
    with pytest.raises(ConsistencyError):
        semi_homogeneous_check(parse_poly("x^3 + y^3", XY), mu=5)


def test_plan_validation():
    with pytest.raises(ValueError):
        SectionPlan(samples=0)
    with pytest.raises(ValueError):
        SectionPlan(coeff_bound=0)


def test_corpus_sectional_bounds(corpus_polys):
    for spec, f in corpus_polys:
        mu = milnor_number(f)
        if mu > 250:
            continue
        prof = sectional_profile(f, SectionPlan(samples=2), mu)
        assert prof.log_convex, spec.name
        m = f.order()
        assert prof.mu_i[1] == m - 1
        assert mu >= (m - 1) ** f.n
        for i in range(1, f.n + 1):
            assert prof.mu_i[i] >= (m - 1) ** i
        if "ex24" in spec.tags:
            tau_min = Fraction((2 * m - 3) * (m + 1) * (m - 1), 3)
            assert tau_min > 0
