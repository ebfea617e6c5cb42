"""Parameter sweeps over counterexample families, log-log slope fitting and
inference of the necessary range of the interpolation exponent theta.

A sweep degenerates a family parameter toward 0 or infinity.  If the three
functional columns scale like (A-B) ~ t^a, B ~ t^b, ||u||^p ~ t^n along the
sweep, the inequality (A-B)^theta B^(1-theta) >= C ||u||^p survives the
degeneration only if theta a + (1-theta) b >= n (parameter -> infinity) or
<= n (parameter -> 0).  Each sweep therefore yields a one-sided bound on
theta; the admissible window is their intersection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import Exponents
from .errors import DomainError
from .families import (BumpShape, DirectRadialTrial, PiecewisePowerProfile,
                       TerraciniProfile, dyadic_chain, multi_bubble, rearranged)
from .functionals import FunctionalReport, evaluate_report

__all__ = [
    "FAMILY_SCHEMAS",
    "ScalingFit",
    "SweepResult",
    "ThetaBound",
    "ThetaInference",
    "fit_loglog",
    "infer_theta_bounds",
    "make_trial",
    "norm_power_column",
    "rearrangement_inequalities",
    "sweep",
    "sweep_family",
    "theta_battery",
]


# ---------------------------------------------------------------------------
# family registry (string ids used by sweeps and the CLI)
# ---------------------------------------------------------------------------

FAMILY_SCHEMAS = {
    "terracini": {"required": {"eta"}, "optional": {"amplitude": 1.0}},
    "piecewise_power": {"required": {"eps"}, "optional": {}},
    "uc_profile": {"required": {"c"}, "optional": {}},
    "multi_bubble": {"required": {"n"}, "optional": {"z_norm": 3.0, "bump_k": 3}},
    "dyadic_chain": {"required": {"n"}, "optional": {"z_norm": 3.0, "bump_k": 3}},
}


def _validated_params(family_id: str, params: dict) -> dict:
    schema = FAMILY_SCHEMAS.get(family_id)
    if schema is None:
        raise DomainError(f"unknown family id {family_id!r}; known: {sorted(FAMILY_SCHEMAS)}")
    params = dict(params)
    unknown = set(params) - schema["required"] - set(schema["optional"])
    if unknown:
        raise DomainError(f"unknown parameters {sorted(unknown)} for family {family_id!r}; "
                          f"schema: {sorted(schema['required'])} + {sorted(schema['optional'])}")
    missing = schema["required"] - set(params)
    if missing:
        raise DomainError(f"missing parameters {sorted(missing)} for family {family_id!r}")
    for key, default in schema["optional"].items():
        params.setdefault(key, default)
    return params


def make_trial(family_id: str, params: dict, exps: Exponents):
    """Instantiate a trial function from its string id and parameter map."""
    params = _validated_params(family_id, params)
    if family_id == "terracini":
        return TerraciniProfile(params["eta"], exps.d, amplitude=params["amplitude"])
    if family_id == "piecewise_power":
        return PiecewisePowerProfile(params["eps"], exps.d, p=exps.p)
    if family_id == "uc_profile":
        return PiecewisePowerProfile(params["c"], exps.d, p=2.0)
    bump = BumpShape(int(params["bump_k"]))
    if family_id == "multi_bubble":
        return multi_bubble(int(params["n"]), bump, params["z_norm"], exps.d, p=exps.p)
    if family_id == "dyadic_chain":
        return dyadic_chain(int(params["n"]), bump, params["z_norm"], exps)
    raise DomainError(f"unhandled family {family_id!r}")


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepResult:
    label: str
    family_id: str
    param_name: str
    direction: str              # "to_zero" or "to_inf"
    params: tuple[float, ...]
    reports: tuple[FunctionalReport, ...]
    exps: Exponents


def sweep(family_id: str, param_name: str, values, exps: Exponents,
          base_params: dict | None = None, pmap=map) -> list[FunctionalReport]:
    """One FunctionalReport per parameter value (monotone, >= 4 of them)."""
    values = [float(v) for v in values]
    if len(values) < 4:
        raise DomainError(f"sweep needs at least 4 parameter values, got {len(values)}")
    diffs = np.diff(values)
    if not (np.all(diffs > 0) or np.all(diffs < 0)):
        raise DomainError("sweep parameter values must be monotone")

    def one(v):
        params = dict(base_params or {})
        params[param_name] = v
        try:
            return evaluate_report(make_trial(family_id, params, exps), exps)
        except Exception as exc:
            raise type(exc)(f"sweep aborted at {param_name}={v}: {exc}") from exc

    return list(pmap(one, values))


def sweep_family(label: str, family_id: str, param_name: str, values, exps: Exponents,
                 direction: str, base_params: dict | None = None, pmap=map) -> SweepResult:
    if direction not in ("to_zero", "to_inf"):
        raise DomainError(f"direction must be to_zero or to_inf, got {direction!r}")
    reports = sweep(family_id, param_name, values, exps, base_params, pmap=pmap)
    return SweepResult(label=label, family_id=family_id, param_name=param_name,
                       direction=direction, params=tuple(float(v) for v in values),
                       reports=tuple(reports), exps=exps)


def norm_power_column(reports, exps: Exponents) -> np.ndarray:
    """||u||_{p*,r}^p per report (weak norm when r = inf)."""
    if math.isinf(exps.r):
        return np.asarray([rep.weak_norm ** exps.p for rep in reports])
    return np.asarray([rep.lorentz[(exps.p_star, exps.r)] ** exps.p for rep in reports])


# ---------------------------------------------------------------------------
# log-log fitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    r_squared: float
    stderr: float
    window: tuple[float, float]
    log_range: float            # spread of log(y); tiny spread = constant column

    @property
    def quality_ok(self) -> bool:
        # a column that is constant to within 2% certifies slope ~ 0 directly,
        # even though r^2 is meaningless at zero variance
        return self.r_squared >= 0.99 or self.log_range <= 0.02


def fit_loglog(xs, ys) -> ScalingFit:
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) != len(ys) or len(xs) < 2:
        raise DomainError("fit_loglog needs matching arrays with >= 2 points")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise DomainError("fit_loglog needs strictly positive entries")
    lx, ly = np.log(xs), np.log(ys)
    n = len(lx)
    mx, my = lx.mean(), ly.mean()
    sxx = float(np.sum((lx - mx) ** 2))
    slope = float(np.sum((lx - mx) * (ly - my)) / sxx)
    intercept = float(my - slope * mx)
    resid = ly - (intercept + slope * lx)
    ss_res = float(np.sum(resid ** 2))
    ss_tot = float(np.sum((ly - my) ** 2))
    if ss_tot <= 1e-28:
        r2 = 1.0 if ss_res <= 1e-24 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    stderr = math.sqrt(ss_res / max(n - 2, 1) / sxx)
    return ScalingFit(slope=slope, intercept=intercept, r_squared=r2, stderr=stderr,
                      window=(float(xs.min()), float(xs.max())),
                      log_range=float(ly.max() - ly.min()))


# ---------------------------------------------------------------------------
# theta inference
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaBound:
    source: str
    kind: str                   # "lower" or "upper"
    value: float
    uncertainty: float
    slopes: tuple[float, float, float]   # (a, b, n) for (A-B), B, ||u||^p


@dataclass(frozen=True)
class ThetaInference:
    lower_bounds: tuple[ThetaBound, ...]
    upper_bounds: tuple[ThetaBound, ...]
    admissible: tuple[float, float] | None
    empty: bool
    refusals: tuple[str, ...]


def _asymptotic_window(sw: SweepResult, k: int = 4):
    order = np.argsort(sw.params)
    idx = order[-k:] if sw.direction == "to_inf" else order[:k]
    idx = np.sort(idx)
    params = np.asarray(sw.params)[idx]
    reports = [sw.reports[i] for i in idx]
    return params, reports


def _bound_from_sweep(sw: SweepResult, exps: Exponents) -> ThetaBound | str:
    params, reports = _asymptotic_window(sw)
    if len(params) < 4:
        return f"{sw.label}: fewer than 4 points in the asymptotic window"
    h_col = np.asarray([rep.h_reduced for rep in reports])
    b_col = np.asarray([rep.B for rep in reports])
    n_col = norm_power_column(reports, exps)
    fits = [fit_loglog(params, col) for col in (h_col, b_col, n_col)]
    bad = [name for name, f in zip(("A-B", "B", "norm^p"), fits) if not f.quality_ok]
    if bad:
        return f"{sw.label}: fit quality below 0.99 for {bad}"
    a, b, n = (f.slope for f in fits)
    coef = a - b
    if abs(coef) < 1e-9:
        return f"{sw.label}: slopes give no theta constraint (a == b)"
    value = (n - b) / coef
    # interval arithmetic on slope +- 2 stderr
    corners = []
    for da in (-2, 2):
        for db in (-2, 2):
            for dn in (-2, 2):
                aa = a + da * fits[0].stderr
                bb = b + db * fits[1].stderr
                nn = n + dn * fits[2].stderr
                if abs(aa - bb) > 1e-12:
                    corners.append((nn - bb) / (aa - bb))
    unc = max(abs(c - value) for c in corners) if corners else 0.0
    # parameter -> inf forces theta (a - b) >= n - b; parameter -> 0 flips it
    greater = sw.direction == "to_inf"
    if coef < 0:
        greater = not greater
    kind = "lower" if greater else "upper"
    return ThetaBound(source=sw.label, kind=kind, value=float(value),
                      uncertainty=float(unc), slopes=(a, b, n))


def infer_theta_bounds(sweeps, exps: Exponents) -> ThetaInference:
    """Combine per-sweep slope constraints into an admissible theta window.

    Emptiness is certified conservatively: only when a lower bound exceeds an
    upper bound even after widening both by their fit uncertainties.
    """
    lowers, uppers, refusals = [], [], []
    for sw in sweeps:
        out = _bound_from_sweep(sw, exps)
        if isinstance(out, str):
            refusals.append(out)
        elif out.kind == "lower":
            lowers.append(out)
        else:
            uppers.append(out)
    admissible = None
    empty = False
    if lowers and uppers:
        lo = max(lowers, key=lambda bb: bb.value)
        hi = min(uppers, key=lambda bb: bb.value)
        admissible = (lo.value, hi.value)
        empty = (lo.value - lo.uncertainty) > (hi.value + hi.uncertainty)
    return ThetaInference(lower_bounds=tuple(lowers), upper_bounds=tuple(uppers),
                          admissible=admissible, empty=empty, refusals=tuple(refusals))


def theta_battery(exps: Exponents, pmap=map) -> list[SweepResult]:
    """The standard sweep battery behind the theta-window reproduction.

    Piecewise powers with eps -> 0 stay below the monotonicity threshold
    (d-p)/p so the weak norm is exactly constant there; the eps -> inf branch
    uses large exponents where all three columns have clean power laws.
    Bubble chains degenerate in N.
    """
    d, p = exps.d, exps.p
    eps0 = (d - p) / p
    sweeps = [
        sweep_family("piecewise_power eps->0", "piecewise_power", "eps",
                     [eps0 / 16.0, eps0 / 8.0, eps0 / 4.0, eps0 / 2.0],
                     exps, "to_zero", pmap=pmap),
        sweep_family("piecewise_power eps->inf", "piecewise_power", "eps",
                     [2.0 ** 9, 2.0 ** 10, 2.0 ** 11, 2.0 ** 12],
                     exps, "to_inf", pmap=pmap),
        sweep_family("multi_bubble N->inf", "multi_bubble", "n",
                     [16, 32, 64, 128], exps, "to_inf", pmap=pmap),
    ]
    if not math.isinf(exps.r) and exps.p <= exps.r < exps.p_star:
        sweeps.append(sweep_family("dyadic_chain N->inf", "dyadic_chain", "n",
                                   [16, 32, 64, 128], exps, "to_inf", pmap=pmap))
    return sweeps


# ---------------------------------------------------------------------------
# rearrangement cross-check
# ---------------------------------------------------------------------------

def rearrangement_inequalities(trial, exps: Exponents) -> dict:
    """A* <= A and B* >= B for a multi-bubble sum and its symmetric
    decreasing rearrangement (computed in closed form from the bump)."""
    from .functionals import translation_sup_hardy

    star = rearranged(trial)
    A = trial.n * trial.bump.gradient_energy(trial.p, trial.d)
    B = translation_sup_hardy(trial, exps)
    return {
        "A": float(A),
        "B": float(B),
        "A_star": float(star.gradient_energy()),
        "B_star": float(star.hardy_at_origin()),
    }
