"""Named invariant suites behind the `verify` command.

Each suite walks the reference configuration matrix (d in {3,4,5} by
default), counts individual assertions and returns one pass/fail record; the
full battery runs a few hundred assertions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import LogGrid, SampledProfile, geometry, make_exponents
from .families import (PiecewisePowerProfile, TerraciniProfile, default_bump,
                       multi_bubble)
from .functionals import (dirichlet_energy, evaluate_report, hardy_term,
                          lorentz_norm, radial_weight_identity_check)
from .quadrature import integrate_derivative_power, integrate_power
from .scaling import rearrangement_inequalities

__all__ = ["CheckResult", "run_verification", "VERIFY_SUITES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    assertions: int
    failures: int
    detail: str = ""


def _profile_matrix(d: int):
    """The reference trial profiles for dimension d (p = 2 representation)."""
    profiles = [TerraciniProfile(eta, d) for eta in (0.25, 0.5, 1.0, 2.0)]
    profiles += [PiecewisePowerProfile(c, d) for c in (0.1, 0.5, 1.0, 2.0, 8.0)]
    profiles.append(PiecewisePowerProfile((d - 2) / 2.0, d))
    grid = LogGrid(-30.0, 30.0, 2001)
    s = grid.points()
    gauss = np.exp(-0.5 * (s / 1.5) ** 2)
    gauss[0] = gauss[-1] = 0.0
    profiles.append(SampledProfile(grid, gauss, d=d, p=2.0))
    skew = np.exp(-0.5 * ((s - 1.0) / 2.5) ** 2) * (1.0 + 0.3 * np.tanh(s))
    skew = np.clip(skew, 0.0, None)
    skew[0] = skew[-1] = 0.0
    profiles.append(SampledProfile(grid, skew, d=d, p=2.0))
    return profiles


def check_hardy_positivity(ds=(3, 4, 5)) -> CheckResult:
    """A - ((d-2)/2)^2 B >= -1e-8 A for every generated profile."""
    count = fails = 0
    detail = []
    for d in ds:
        exps = make_exponents(d, 2.0, math.inf)
        for prof in _profile_matrix(d):
            A = dirichlet_energy(prof, exps)
            B = hardy_term(prof, exps)
            count += 1
            if A - exps.hardy_constant * B < -1e-8 * A:
                fails += 1
                detail.append(f"d={d} {type(prof).__name__}")
    return CheckResult("hardy_positivity", fails == 0, count, fails, "; ".join(detail))


def check_quotient_monotonicity(seed: int = 0) -> CheckResult:
    """B -> (A-B)^theta B^(1-theta) strictly decreases on ((1-theta)A, A)."""
    rng = np.random.default_rng(seed)
    count = fails = 0
    for _ in range(100):
        A = float(rng.uniform(0.5, 20.0))
        theta = float(rng.uniform(0.05, 0.95))
        lo, hi = (1.0 - theta) * A, A
        b1, b2 = np.sort(rng.uniform(lo + 1e-9 * A, hi - 1e-9 * A, size=2))
        if b1 == b2:
            continue
        g1 = (A - b1) ** theta * b1 ** (1.0 - theta)
        g2 = (A - b2) ** theta * b2 ** (1.0 - theta)
        count += 1
        if not g1 > g2:
            fails += 1
    return CheckResult("quotient_monotonicity_in_B", fails == 0, count, fails)


def check_cauchy_schwarz_chain(ds=(3, 4, 5)) -> CheckResult:
    """(int r f'^2)(int f^2/r) >= ||f||_inf^4, equality exactly on f(r)=r^(+-c)."""
    count = fails = 0
    detail = []
    for d in ds:
        for prof in _profile_matrix(d):
            K = integrate_derivative_power(prof, 2.0)
            M = integrate_power(prof, 2.0)
            lo, hi = prof.integration_window(1.0)
            peak = float(np.max(prof.psi(np.linspace(lo, hi, 4001))))
            ratio = K * M / peak ** 4
            is_power = isinstance(prof, PiecewisePowerProfile)
            count += 1
            ok = abs(ratio - 1.0) <= 1e-6 if is_power else ratio > 1.0 + 1e-6
            if not ok:
                fails += 1
                detail.append(f"d={d} {type(prof).__name__} ratio={ratio:.6f}")
    return CheckResult("cauchy_schwarz_chain", fails == 0, count, fails, "; ".join(detail))


def check_weak_norm_domination(ds=(3, 4, 5)) -> CheckResult:
    """||u||_{2*,inf} <= |B(0,1)|^(1/2*) ||f||_inf for every radial profile."""
    count = fails = 0
    detail = []
    for d in ds:
        two_star = 2.0 * d / (d - 2.0)
        cap = geometry(d).ball_volume ** (1.0 / two_star)
        for prof in _profile_matrix(d):
            lo, hi = prof.integration_window(1.0)
            peak = float(np.max(prof.psi(np.linspace(lo, hi, 4001))))
            wn = lorentz_norm(prof, two_star, math.inf)
            count += 1
            if wn > cap * peak * (1.0 + 1e-8):
                fails += 1
                detail.append(f"d={d} {type(prof).__name__} excess={wn / (cap * peak) - 1:.2e}")
    return CheckResult("weak_norm_domination", fails == 0, count, fails, "; ".join(detail))


def check_rearrangement(ds=(3, 4, 5)) -> CheckResult:
    """A* <= A and B* >= B for multi-bubble sums (Polya-Szego / Hardy-Littlewood)."""
    count = fails = 0
    detail = []
    for d in ds:
        exps = make_exponents(d, 2.0, math.inf)
        for n in (4, 16):
            vals = rearrangement_inequalities(multi_bubble(n, default_bump(), 3.0, d), exps)
            count += 2
            if not vals["A_star"] <= vals["A"] * (1.0 + 1e-12):
                fails += 1
                detail.append(f"d={d} N={n} A*>{vals['A']}")
            if not vals["B_star"] >= vals["B"] * (1.0 - 1e-12):
                fails += 1
                detail.append(f"d={d} N={n} B*<{vals['B']}")
    return CheckResult("rearrangement_multibubble", fails == 0, count, fails, "; ".join(detail))


def check_holder_chain(ds=(3, 4, 5)) -> CheckResult:
    """(int |psi'|^p)^(1/p) (int |psi|^p)^(1/p') >= (2/p) ||psi||_inf^p."""
    count = fails = 0
    detail = []
    for d in ds:
        for p in (2.0, 2.5, 3.0):
            for prof in _profile_matrix(d):
                K = integrate_derivative_power(prof, p) ** (1.0 / p)
                M = integrate_power(prof, p) ** (1.0 - 1.0 / p)
                lo, hi = prof.integration_window(1.0)
                peak = float(np.max(prof.psi(np.linspace(lo, hi, 4001))))
                count += 1
                if K * M < (2.0 / p) * peak ** p * (1.0 - 1e-9):
                    fails += 1
                    detail.append(f"d={d} p={p} {type(prof).__name__}")
    return CheckResult("holder_chain", fails == 0, count, fails, "; ".join(detail))


def check_radial_weight_identity(ds=(3, 4, 5)) -> CheckResult:
    """||u||_{q,s}^s / int |u|^s |x|^(-alpha) = ball_volume^(s/q-1) to 1e-4."""
    count = fails = 0
    detail = []
    for d in ds:
        two_star = 2.0 * d / (d - 2.0)
        ball = geometry(d).ball_volume
        profiles = [TerraciniProfile(0.5, d), TerraciniProfile(1.0, d),
                    PiecewisePowerProfile(0.3 * (d - 2) / 2.0, d)]
        for prof in profiles:
            for srel in (1.0, 0.5, 1.0 / 3.0):
                s = srel * two_star
                if s < 1.0:
                    continue
                ratio = radial_weight_identity_check(prof, two_star, s)
                expect = ball ** (s / two_star - 1.0)
                count += 1
                if abs(ratio / expect - 1.0) > 1e-4:
                    fails += 1
                    detail.append(f"d={d} s={s:.3f} {type(prof).__name__} "
                                  f"ratio={ratio:.8f} vs {expect:.8f}")
    return CheckResult("radial_weight_identity", fails == 0, count, fails, "; ".join(detail))


def check_scale_invariance(ds=(3, 4, 5)) -> CheckResult:
    """The interpolation quotient at theta = 1/d, r = 2* is invariant under
    amplitude scaling and s-dilation of the sech-power family."""
    count = fails = 0
    detail = []
    for d in ds:
        two_star = 2.0 * d / (d - 2.0)
        exps = make_exponents(d, 2.0, two_star, theta=1.0 / d)
        base = evaluate_report(TerraciniProfile(1.0, d), exps).quotient
        for eta in (0.5, 2.0):
            for amp in (0.5, 3.0):
                q = evaluate_report(TerraciniProfile(eta, d, amplitude=amp), exps).quotient
                count += 1
                if abs(q / base - 1.0) > 1e-10:
                    fails += 1
                    detail.append(f"d={d} eta={eta} a={amp} dev={q / base - 1:.2e}")
    return CheckResult("scale_invariance", fails == 0, count, fails, "; ".join(detail))


VERIFY_SUITES = {
    "hardy_positivity": check_hardy_positivity,
    "quotient_monotonicity_in_B": lambda ds=(3, 4, 5): check_quotient_monotonicity(),
    "cauchy_schwarz_chain": check_cauchy_schwarz_chain,
    "weak_norm_domination": check_weak_norm_domination,
    "rearrangement_multibubble": check_rearrangement,
    "holder_chain": check_holder_chain,
    "radial_weight_identity": check_radial_weight_identity,
    "scale_invariance": check_scale_invariance,
}


def run_verification(ds=(3, 4, 5)) -> list[CheckResult]:
    return [fn(ds=tuple(ds)) if name != "quotient_monotonicity_in_B" else fn()
            for name, fn in VERIFY_SUITES.items()]
