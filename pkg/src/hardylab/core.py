"""Exponent bookkeeping, log grids, geometry constants and radial profiles.

All radial trial functions are stored through their ground-state
representation u(x) = |x|^(1-d/p) f(|x|) with f(r) = psi(log r).  Every 1D
integral of interest then lives on the log line s = log r, where the measure
dr/r becomes ds and the grids can stay uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "Exponents",
    "GeometryConstants",
    "LogGrid",
    "RadialProfile",
    "SampledProfile",
    "geometry",
    "make_exponents",
    "DEFAULT_GRID",
]


@dataclass(frozen=True)
class Exponents:
    """The tuple (d, p, p*, r, theta) plus the admissible theta window.

    `r` may be `math.inf` (weak Lorentz norm).  The window
    [p/min(r, p*), 1/p - 1/r] may be empty; emptiness is a flag, never an
    error.
    """

    d: int
    p: float
    r: float
    theta: float
    p_star: float
    theta_min: float
    theta_max: float

    @property
    def window_empty(self) -> bool:
        return self.theta_min > self.theta_max

    @property
    def theta_window(self) -> tuple[float, float]:
        return (self.theta_min, self.theta_max)

    @property
    def hardy_constant(self) -> float:
        """((d-p)/p)^p, the weight on the Hardy term inside the deficit."""
        return ((self.d - self.p) / self.p) ** self.p


def make_exponents(d: int, p: float, r: float, theta: float | None = None) -> Exponents:
    """Validate (d, p, r), compute p* and the theta window.

    theta=None resolves to the endpoint 1/p - 1/r, the exponent for which
    the radial optimizers are classified.  Out-of-range inputs raise
    DomainError naming the violated bound.
    """
    if not (isinstance(d, (int, np.integer)) and d >= 2):
        raise DomainError(f"dimension must be an integer >= 2, got d={d!r}")
    d = int(d)
    p = float(p)
    if not (2.0 <= p < d):
        raise DomainError(f"gradient exponent must satisfy 2 <= p < d, got p={p} (d={d})")
    r = float(r)
    if not (r >= p):
        raise DomainError(f"Lorentz index must satisfy r >= p or r == inf, got r={r}")
    p_star = p * d / (d - p)
    theta_min = p / min(r, p_star)
    theta_max = 1.0 / p - (0.0 if math.isinf(r) else 1.0 / r)
    if theta is None:
        theta = theta_max
    theta = float(theta)
    if not (0.0 <= theta <= 1.0):
        raise DomainError(f"interpolation exponent must lie in [0, 1], got theta={theta}")
    return Exponents(d=d, p=p, r=r, theta=theta, p_star=p_star,
                     theta_min=theta_min, theta_max=theta_max)


@dataclass(frozen=True)
class GeometryConstants:
    d: int
    sphere_area: float  # |S^(d-1)| = 2 pi^(d/2) / Gamma(d/2)
    ball_volume: float  # |B(0,1)| = |S^(d-1)| / d


def geometry(d: int) -> GeometryConstants:
    if d < 2:
        raise DomainError(f"geometry requires d >= 2, got d={d}")
    area = 2.0 * math.pi ** (d / 2.0) / math.gamma(d / 2.0)
    return GeometryConstants(d=int(d), sphere_area=area, ball_volume=area / d)


@dataclass(frozen=True)
class LogGrid:
    """Uniform grid in s = log r.  n is odd so Simpson weights apply cleanly."""

    s_min: float
    s_max: float
    n: int

    def __post_init__(self):
        if not self.s_min < self.s_max:
            raise DomainError(f"grid needs s_min < s_max, got [{self.s_min}, {self.s_max}]")
        if self.n < 3:
            raise DomainError(f"grid needs n >= 3 points, got n={self.n}")
        if self.n % 2 == 0:
            raise DomainError(f"grid needs an odd point count, got n={self.n}")

    @property
    def h(self) -> float:
        return (self.s_max - self.s_min) / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.s_min, self.s_max, self.n)


DEFAULT_GRID = LogGrid(-40.0, 40.0, 16001)


class RadialProfile:
    """Base class for radial trial profiles in ground-state form.

    Subclasses provide psi(s) (and its derivative where analytic).  The
    induced d-dimensional function is u(rho) = rho^(1-d/p) psi(log rho).
    Instances are immutable after construction and safe to share.
    """

    d: int
    p: float

    @property
    def u_exponent(self) -> float:
        return 1.0 - self.d / self.p

    # --- evaluation -----------------------------------------------------
    def psi(self, s):
        raise NotImplementedError

    def psi_prime(self, s):
        raise NotImplementedError

    def f(self, r):
        r = np.asarray(r, dtype=float)
        return self.psi(np.log(r))

    def u(self, rho):
        rho = np.asarray(rho, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            return rho ** self.u_exponent * self.psi(np.log(rho))

    def u_of_s(self, s):
        """u evaluated at rho = e^s, computed without forming rho."""
        s = np.asarray(s, dtype=float)
        return np.exp(self.u_exponent * s) * self.psi(s)

    # --- structure hints used by quadrature ----------------------------
    def breakpoints(self) -> tuple[float, ...]:
        """Interior kink locations of psi in s (quadrature splits there)."""
        return ()

    def integration_window(self, power: float) -> tuple[float, float]:
        """Interval outside which |psi|^power is negligible."""
        raise NotImplementedError

    def u_extrema(self) -> tuple[float, ...] | None:
        """Interior extrema of u in s, or None when unknown (detect numerically)."""
        return None

    def u_nonincreasing(self) -> bool | None:
        """Whether the induced u is radially nonincreasing (None = unknown)."""
        return None

    # --- exact integral hooks (closed-form families override) ----------
    def exact_power_integral(self, exponent: float) -> float | None:
        """Exact value of int |psi|^exponent ds when the family knows it."""
        return None

    def exact_derivative_power_integral(self, exponent: float) -> float | None:
        """Exact value of int |psi'|^exponent ds when the family knows it."""
        return None


class SampledProfile(RadialProfile):
    """psi sampled on a uniform log grid; linear interpolation inside,
    zero outside (all trial families decay at both ends of the log line,
    so the truncation only contributes a documented tail error)."""

    def __init__(self, grid: LogGrid, values, d: int, p: float = 2.0,
                 breakpoints: tuple[float, ...] = ()):
        values = np.asarray(values, dtype=float)
        if values.shape != (grid.n,):
            raise DomainError(f"need one sample per grid point: {values.shape} vs n={grid.n}")
        if not np.all(np.isfinite(values)):
            raise DomainError("sampled profile values must be finite")
        if np.any(values < 0):
            raise DomainError("sampled profile values must be nonnegative")
        self.grid = grid
        self.values = values
        self.d = int(d)
        self.p = float(p)
        self._breakpoints = tuple(float(b) for b in breakpoints)
        self._s = grid.points()

    def psi(self, s):
        return np.interp(np.asarray(s, dtype=float), self._s, self.values,
                         left=0.0, right=0.0)

    def psi_prime(self, s):
        dv = self.derivative_values()
        return np.interp(np.asarray(s, dtype=float), self._s, dv, left=0.0, right=0.0)

    def derivative_values(self) -> np.ndarray:
        """Second-order central differences, first-order one-sided at the ends."""
        v = self.values
        h = self.grid.h
        dv = np.empty_like(v)
        dv[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
        dv[0] = (v[1] - v[0]) / h
        dv[-1] = (v[-1] - v[-2]) / h
        return dv

    def breakpoints(self):
        return self._breakpoints

    def integration_window(self, power: float):
        return (self.grid.s_min, self.grid.s_max)
