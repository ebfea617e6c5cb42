"""Integration and differentiation on the log line, plus distribution
functions |{ |u| > t }| for layer-cake norms.

Sampled profiles integrate with composite Simpson on their own grid; closed
forms use exact antiderivatives when the family provides them and adaptive
quadrature otherwise.  Distribution functions locate crossing radii by
bisection inside each monotone segment of the induced radial function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, simpson

from .core import RadialProfile, SampledProfile
from .errors import DomainError, NumericError

__all__ = [
    "DistributionFunction",
    "differentiate",
    "distribution_function",
    "integrate_power",
    "integrate_derivative_power",
    "measure_above_many",
    "sample_distribution",
    "u_supremum",
]

_BISECT_TOL_S = 1e-12  # crossing radii feed suprema; keep them tight


def _simpson_with_breaks(values: np.ndarray, s: np.ndarray, breaks) -> float:
    """Composite Simpson, split at interior break nodes so kinks do not
    pollute the stencil."""
    idx = [0]
    for b in breaks:
        j = int(np.argmin(np.abs(s - b)))
        if 0 < j < len(s) - 1:
            idx.append(j)
    idx.append(len(s) - 1)
    idx = sorted(set(idx))
    total = 0.0
    for a, b in zip(idx[:-1], idx[1:]):
        total += simpson(values[a:b + 1], x=s[a:b + 1])
    return float(total)


def integrate_power(profile: RadialProfile, exponent: float) -> float:
    """int_R |psi(s)|^exponent ds  ( = int_0^inf |f(r)|^exponent dr/r )."""
    if exponent < 1.0:
        raise DomainError(f"integrate_power needs exponent >= 1, got {exponent}")
    exact = profile.exact_power_integral(exponent)
    if exact is not None:
        return float(exact)
    if isinstance(profile, SampledProfile):
        vals = profile.values ** exponent
        if not np.all(np.isfinite(vals)):
            raise NumericError("non-finite integrand in integrate_power")
        return _simpson_with_breaks(vals, profile.grid.points(), profile.breakpoints())
    lo, hi = profile.integration_window(exponent)
    pts = [b for b in profile.breakpoints() if lo < b < hi]
    val, _ = quad(lambda s: float(profile.psi(s)) ** exponent, lo, hi,
                  points=pts or None, limit=300)
    if not np.isfinite(val):
        raise NumericError("non-finite value in integrate_power")
    return float(val)


def integrate_derivative_power(profile: RadialProfile, p: float) -> float:
    """int_R |psi'(s)|^p ds  ( = int_0^inf |f'(r)|^p r^(p-1) dr )."""
    if p < 2.0:
        raise DomainError(f"integrate_derivative_power needs p >= 2, got {p}")
    exact = profile.exact_derivative_power_integral(p)
    if exact is not None:
        return float(exact)
    if isinstance(profile, SampledProfile):
        dv = np.abs(profile.derivative_values()) ** p
        if not np.all(np.isfinite(dv)):
            raise NumericError("non-finite integrand in integrate_derivative_power")
        return _simpson_with_breaks(dv, profile.grid.points(), profile.breakpoints())
    lo, hi = profile.integration_window(p)
    pts = [b for b in profile.breakpoints() if lo < b < hi]
    val, _ = quad(lambda s: abs(float(profile.psi_prime(s))) ** p, lo, hi,
                  points=pts or None, limit=300)
    if not np.isfinite(val):
        raise NumericError("non-finite value in integrate_derivative_power")
    return float(val)


def differentiate(profile: SampledProfile) -> SampledProfile:
    """Sampled derivative: central differences interior, one-sided at ends."""
    if not isinstance(profile, SampledProfile):
        raise DomainError("differentiate acts on sampled profiles")
    dv = profile.derivative_values()
    # derivative samples may be negative; store through the raw constructor
    out = object.__new__(SampledProfile)
    out.grid = profile.grid
    out.values = dv
    out.d = profile.d
    out.p = profile.p
    out._breakpoints = profile.breakpoints()
    out._s = profile.grid.points()
    return out


# ---------------------------------------------------------------------------
# monotone-segment machinery for distribution functions
# ---------------------------------------------------------------------------

class _RadialShape:
    """Monotone decomposition of the induced u(e^s) over the profile's window."""

    def __init__(self, profile: RadialProfile):
        self.profile = profile
        lo, hi = profile.integration_window(1.0)
        extrema = profile.u_extrema()
        if extrema is None:
            s = np.linspace(lo, hi, 4097)
            u = profile.u_of_s(s)
            du = np.diff(u)
            sign = np.sign(du)
            flips = np.nonzero(sign[1:] * sign[:-1] < 0)[0] + 1
            extrema = tuple(s[j] for j in flips)
        bounds = [lo] + [e for e in extrema if lo < e < hi] + [hi]
        self.bounds = np.asarray(bounds)
        self.u_bounds = np.asarray([float(profile.u_of_s(b)) for b in bounds])

    def sup(self) -> float:
        return float(np.max(self.u_bounds))

    def measure_above(self, ts: np.ndarray) -> np.ndarray:
        """|{u > t}| for an array of thresholds, via vectorized bisection."""
        from .core import geometry

        prof = self.profile
        d = prof.d
        nseg = len(self.bounds) - 1
        # crossing s per (segment, t); NaN where the segment does not cross
        cross = np.full((nseg, len(ts)), np.nan)
        for k in range(nseg):
            slo, shi = self.bounds[k], self.bounds[k + 1]
            ulo, uhi = self.u_bounds[k], self.u_bounds[k + 1]
            umin, umax = min(ulo, uhi), max(ulo, uhi)
            mask = (ts > umin) & (ts < umax)
            if not np.any(mask):
                continue
            t_sel = ts[mask]
            a = np.full(t_sel.shape, slo)
            b = np.full(t_sel.shape, shi)
            decreasing = ulo > uhi
            span = shi - slo
            n_iter = max(int(np.ceil(np.log2(span / _BISECT_TOL_S))), 1)
            for _ in range(n_iter):
                mid = 0.5 * (a + b)
                above = prof.u_of_s(mid) > t_sel
                if decreasing:
                    a = np.where(above, mid, a)
                    b = np.where(above, b, mid)
                else:
                    b = np.where(above, mid, b)
                    a = np.where(above, a, mid)
            sol = np.full(ts.shape, np.nan)
            sol[mask] = 0.5 * (a + b)
            cross[k] = sol

        ball = geometry(d).ball_volume
        out = np.zeros(len(ts))
        for i, t in enumerate(ts):
            above = self.u_bounds[0] > t
            rho_prev = 0.0  # the rho -> 0 end contributes zero volume
            total = 0.0
            for k in range(nseg):
                sc = cross[k, i]
                if np.isnan(sc):
                    continue
                rho_c = np.exp(sc)
                if above:
                    total += rho_c ** d - rho_prev ** d
                else:
                    rho_prev = rho_c
                above = not above
            if above:
                total += np.exp(self.bounds[-1]) ** d - rho_prev ** d
            out[i] = ball * total
        return out


def _shape_of(profile: RadialProfile) -> _RadialShape:
    shape = getattr(profile, "_shape_cache", None)
    if shape is None:
        shape = _RadialShape(profile)
        try:
            profile._shape_cache = shape
        except AttributeError:
            pass
    return shape


def u_supremum(trial) -> float:
    """sup |u| (may be a large finite surrogate for profiles unbounded at 0)."""
    if hasattr(trial, "max_value"):
        return float(trial.max_value())
    if hasattr(trial, "amplitude") and not isinstance(trial, RadialProfile):
        return float(trial.amplitude)
    return _shape_of(trial).sup()


def measure_above_many(trial, ts) -> np.ndarray:
    """Vector form of distribution_function."""
    ts = np.asarray(ts, dtype=float)
    if np.any(ts <= 0):
        raise DomainError("thresholds must be positive")
    if hasattr(trial, "measure_above"):
        return np.asarray([trial.measure_above(float(t)) for t in ts])
    return _shape_of(trial).measure_above(ts)


def distribution_function(trial, t: float) -> float:
    """|{x : |u(x)| > t}| for the radial function induced by the profile
    (or a bubble sum).  t at or above sup|u| returns 0, not an error."""
    if not t > 0:
        raise DomainError(f"threshold must be positive, got t={t}")
    return float(measure_above_many(trial, np.asarray([t]))[0])


@dataclass(frozen=True)
class DistributionFunction:
    """Sampled (t, |{|u|>t}|) pairs on a geometric threshold grid."""

    ts: np.ndarray
    measures: np.ndarray

    def is_nonincreasing(self, slack: float = 1e-12) -> bool:
        m = self.measures
        return bool(np.all(m[1:] <= m[:-1] * (1.0 + slack) + slack))


def sample_distribution(trial, n: int = 100, t_min: float | None = None,
                        t_max: float | None = None) -> DistributionFunction:
    sup = u_supremum(trial)
    if t_max is None:
        t_max = sup
    if t_min is None:
        t_min = min(1e-6 * sup, 1e-6)
    ts = np.geomspace(t_min, t_max, n)
    return DistributionFunction(ts=ts, measures=measure_above_many(trial, ts))
