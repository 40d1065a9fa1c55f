"""Assemble an :class:`InvariantReport` for one germ and collect failed checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from germlab.milnor import ConsistencyError, GermError, MilnorAlgebra, verify_theorem
from germlab.newton import NotConvenient, SupportSet, kushnirenko_report, newton_data
from germlab.parsing import GermSpec, InvariantReport, ParseError
from germlab.polyring import Polynomial
from germlab.sectional import (
    SectionPlan,
    multiplicity_bounds,
    sectional_profile,
    semi_homogeneous_check,
)
from germlab.standard_basis import StaircaseTooLarge

CHECKS = ("algebra", "newton", "sectional")


@dataclass
class Analysis:
    report: InvariantReport
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.report.status != "INPUT_ERROR"


def _checks(selected) -> set:
    if selected is None or "all" in selected:
        return set(CHECKS)
    unknown = set(selected) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    return set(selected)


def analyze_poly(f: Polynomial, name: str = "germ", checks: Optional[Iterable[str]] = None,
                 plan: SectionPlan = SectionPlan(), powers: Iterable[int] = (),
                 tags: Iterable[str] = ()) -> Analysis:
    checks = _checks(checks)
    tags = set(tags)
    n = f.n
    rep = InvariantReport(name=name, n=n, status="OK")
    out = Analysis(rep)
    try:
        alg = MilnorAlgebra(f)
    except GermError as exc:
        rep.status = exc.status
        rep.message = str(exc)
        if rep.status == "SMOOTH":
            rep.m, rep.mu, rep.tau = 1, 0, 0
        return out
    except StaircaseTooLarge as exc:
        rep.status = "INPUT_ERROR"
        rep.message = str(exc)
        return out

    fail = out.failures.append
    rep.m = f.order()
    rep.mu = alg.mu
    try:
        rep.tau = alg.tau
        rep.ratio = Fraction(rep.mu, rep.tau)

        bs_membership = alg.power_membership(n)
        A = alg.operator  # construction asserts A^n = 0
        rep.bs_holds = bs_membership and A.power(n).is_zero()
        if not rep.bs_holds:
            fail("f^n not in J_f")
        ks = sorted(set(powers) | ({2} if "swh" in tags else set()) | {max(n - 1, 1), n})
        rep.f_pow_checks = {k: alg.power_membership(k) for k in ks}
        if "swh" in tags and not rep.f_pow_checks[2]:
            fail("f^2 not in J_f for a semi-weighted-homogeneous germ")
        if "malgrange" in tags and n >= 2 and rep.f_pow_checks[n - 1]:
            fail("f^(n-1) in J_f for a Malgrange germ")

        rep.saito_membership = alg.power_membership(1)
        three_way = {rep.mu == rep.tau, rep.saito_membership, A.is_zero()}
        if len(three_way) != 1:
            fail("mu = tau, f in J_f and A = 0 disagree")

        if "algebra" in checks:
            th = verify_theorem(f, alg, rep.tau)
            rep.filtration_dims = list(th.profile.d)
            rep.theorem_ok = th.theorem_ok
            rep.equality_case = th.equality_case
            if not th.theorem_ok:
                fail("mu <= n tau or a filtration identity failed")
            if "malgrange" in tags and not rep.ratio < Fraction(3, 2):
                fail("Malgrange germ with mu/tau >= 3/2")

        if "newton" in checks:
            data = newton_data(f)
            if data.convenient:
                kr = kushnirenko_report(f, rep.mu, rep.tau, data)
                rep.newton = {**data.to_dict(), **kr}
                if not (kr["mu_ge_nu"] and kr["tau_ge_nu_over_n"]):
                    fail("Newton number bound violated")
            else:
                rep.newton = {"convenient": False,
                              "missing_axes": SupportSet.of(f).missing_axes()}

        if "sectional" in checks:
            prof = sectional_profile(f, plan, rep.mu)
            bounds = multiplicity_bounds(f, rep.mu, rep.tau)
            sec = {**prof.to_dict(), **bounds,
                   "semi_homogeneous": semi_homogeneous_check(f, rep.mu),
                   "seed": plan.seed, "samples": plan.samples, "coeff_bound": plan.coeff_bound}
            if "ex24" in tags:
                m = rep.m
                bound = Fraction((2 * m - 3) * (m + 1) * (m - 1), 3)
                sec["ex24_tau_min"] = bound
                sec["ex24_tau_ge_tau_min"] = Fraction(rep.tau) >= bound
            rep.sectional = sec
            if not prof.log_convex:
                fail("sectional Milnor numbers are not log-convex")
            if not (bounds["mu_ge_pow"] and bounds["tau_ge_pow_over_n"]):
                fail("multiplicity bound violated")
            if "homogeneous" in tags and n > 1 and not bounds["tau_gt_pow_over_n"]:
                fail("tau = (m-1)^n / n attained on a homogeneous germ")
            if prof.mu_i[0] != 1 or prof.mu_i[1] != rep.m - 1 or prof.mu_i[-1] != rep.mu:
                fail("sectional endpoints wrong")
    except ConsistencyError as exc:
        fail(f"consistency: {exc}")
    return out


def analyze(spec: GermSpec, checks=None, plan: SectionPlan = SectionPlan(), powers=()) -> Analysis:
    try:
        f = spec.parse()
    except (ParseError, ValueError) as exc:
        rep = InvariantReport(name=spec.name, n=spec.n, status="INPUT_ERROR", message=str(exc))
        return Analysis(rep)
    out = analyze_poly(f, spec.name, checks, plan, powers, spec.tags)
    rep = out.report
    for key, value in spec.expected.items():
        got = getattr(rep, key, None) if key != "nu" else (rep.newton or {}).get("nu")
        if key == "nu" and rep.newton is None:
            continue
        if got != value:
            out.failures.append(f"expected {key} = {value}, got {got}")
    return out
