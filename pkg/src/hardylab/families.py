"""Closed-form trial families: sech-power optimizers, piecewise powers,
compactly supported bumps and their translated/rescaled chains.

The sech-power family in the log variable, psi_eta(s) = (2 cosh(eta s))^-(d-2)/2,
is the profile form of u_eta(x) = (|x|^(1-eta) (1+|x|^(2eta)))^-(d-2)/2; both
representations are kept in closed form with analytic derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .core import Exponents, LogGrid, RadialProfile, geometry
from .errors import DomainError, OverlapError

__all__ = [
    "BubbleTrial",
    "BumpShape",
    "DirectRadialTrial",
    "PiecewisePowerProfile",
    "TerraciniProfile",
    "default_bump",
    "dyadic_chain",
    "el_residual",
    "multi_bubble",
    "piecewise_power",
    "terracini_profile",
    "uc_profile",
]


def _sech_moment(b: float) -> float:
    """int_R sech(x)^b dx = sqrt(pi) Gamma(b/2) / Gamma((b+1)/2)."""
    return math.sqrt(math.pi) * math.gamma(b / 2.0) / math.gamma((b + 1.0) / 2.0)


def _tanh_sech_moment(a: float, b: float) -> float:
    """int_R |tanh x|^a sech(x)^b dx = Beta((a+1)/2, b/2)."""
    return (math.gamma((a + 1.0) / 2.0) * math.gamma(b / 2.0)
            / math.gamma((a + 1.0) / 2.0 + b / 2.0))


class TerraciniProfile(RadialProfile):
    """psi(s) = amplitude * (2 cosh(eta s))^(-(d-2)/2), p = 2.

    Induced u is nonincreasing for eta <= 1; for eta > 1 it rises to a single
    interior maximum (the weight coefficient in the associated equation
    changes sign there, which the residual check tolerates).
    """

    def __init__(self, eta: float, d: int, amplitude: float = 1.0):
        if not eta > 0:
            raise DomainError(f"terracini profile needs eta > 0, got {eta}")
        if d < 3:
            raise DomainError(f"terracini profile needs d >= 3, got {d}")
        self.eta = float(eta)
        self.d = int(d)
        self.p = 2.0
        self.amplitude = float(amplitude)
        self.m = (d - 2) / 2.0

    def psi(self, s):
        s = np.asarray(s, dtype=float)
        # 2 cosh(eta s) = e^(eta|s|) (1 + e^(-2 eta |s|)), overflow safe
        a = self.eta * np.abs(s)
        return self.amplitude * np.exp(-self.m * a) * (1.0 + np.exp(-2.0 * a)) ** (-self.m)

    def psi_prime(self, s):
        s = np.asarray(s, dtype=float)
        return -self.m * self.eta * np.tanh(self.eta * s) * self.psi(s)

    def integration_window(self, power):
        half = (45.0 + abs(math.log(max(self.amplitude, 1e-300)))) / (self.m * self.eta * max(power, 1.0))
        return (-half - 2.0, half + 2.0)

    def u_extrema(self):
        if self.eta <= 1.0:
            return ()
        rho_star = ((self.eta - 1.0) / (self.eta + 1.0)) ** (1.0 / (2.0 * self.eta))
        return (math.log(rho_star),)

    def u_nonincreasing(self):
        return self.eta <= 1.0

    def exact_power_integral(self, exponent):
        b = self.m * exponent
        return self.amplitude ** exponent * 2.0 ** (-b) * _sech_moment(b) / self.eta

    def exact_derivative_power_integral(self, exponent):
        b = self.m * exponent
        pref = (self.m * self.eta) ** exponent * self.amplitude ** exponent
        return pref * 2.0 ** (-b) / self.eta * _tanh_sech_moment(exponent, b)


class PiecewisePowerProfile(RadialProfile):
    """f(r) = r^c for r <= 1 and r^-c for r > 1, i.e. psi(s) = e^(-c|s|).

    Serves both the epsilon-profile (c = eps) and the weak-norm optimizer
    family u_c.  All power integrals have exact antiderivatives, which
    avoids the kink at s = 0 entirely.
    """

    def __init__(self, c: float, d: int, p: float = 2.0, amplitude: float = 1.0):
        if not c > 0:
            raise DomainError(f"piecewise power profile needs a positive exponent, got {c}")
        if d < 3:
            raise DomainError(f"piecewise power profile needs d >= 3, got {d}")
        self.c = float(c)
        self.d = int(d)
        self.p = float(p)
        self.amplitude = float(amplitude)

    def psi(self, s):
        s = np.asarray(s, dtype=float)
        return self.amplitude * np.exp(-self.c * np.abs(s))

    def psi_prime(self, s):
        s = np.asarray(s, dtype=float)
        return -self.c * np.sign(s) * self.psi(s)

    def breakpoints(self):
        return (0.0,)

    def integration_window(self, power):
        half = (45.0 + abs(math.log(max(self.amplitude, 1e-300)))) / (self.c * max(power, 1.0))
        return (-half - 1.0, half + 1.0)

    def u_extrema(self):
        if self.c <= (self.d - self.p) / self.p:
            return ()
        return (0.0,)

    def u_nonincreasing(self):
        return self.c <= (self.d - self.p) / self.p

    def exact_power_integral(self, exponent):
        return self.amplitude ** exponent * 2.0 / (exponent * self.c)

    def exact_derivative_power_integral(self, exponent):
        return (self.amplitude * self.c) ** exponent * 2.0 / (exponent * self.c)


def terracini_profile(eta: float, d: int, amplitude: float = 1.0) -> TerraciniProfile:
    return TerraciniProfile(eta, d, amplitude)


def uc_profile(c: float, d: int) -> PiecewisePowerProfile:
    """Weak-norm optimizer candidate; c above (d-2)/2 is allowed and used
    for the strict-inequality counterexample."""
    return PiecewisePowerProfile(c, d, p=2.0)


def piecewise_power(eps: float, d: int, p: float = 2.0) -> PiecewisePowerProfile:
    return PiecewisePowerProfile(eps, d, p=p)


# ---------------------------------------------------------------------------
# compactly supported bumps and bubble chains
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bump_radial_integral(k: int, power: float, weight: float, d: int) -> float:
    """int_0^1 ((1-rho^2)^k)^power rho^weight drho via adaptive quadrature."""
    val, _ = quad(lambda rho: (1.0 - rho * rho) ** (k * power) * rho ** weight,
                  0.0, 1.0, limit=200)
    return val


@lru_cache(maxsize=None)
def _bump_gradient_integral(k: int, power: float, d: int) -> float:
    val, _ = quad(lambda rho: (2.0 * k * rho) ** power
                  * (1.0 - rho * rho) ** ((k - 1) * power) * rho ** (d - 1),
                  0.0, 1.0, limit=200)
    return val


@dataclass(frozen=True)
class BumpShape:
    """Radial bump phi(rho) = (1 - rho^2)^k on the unit ball, zero outside.

    Smooth enough for every functional here (C^(k-1) at the support edge)
    and invertible in closed form, which keeps bubble distribution
    functions exact.
    """

    k: int = 3

    def value(self, rho):
        rho = np.asarray(rho, dtype=float)
        inside = rho < 1.0
        out = np.zeros_like(rho)
        out[inside] = (1.0 - rho[inside] ** 2) ** self.k
        return out

    def slope(self, rho):
        rho = np.asarray(rho, dtype=float)
        inside = rho < 1.0
        out = np.zeros_like(rho)
        out[inside] = -2.0 * self.k * rho[inside] * (1.0 - rho[inside] ** 2) ** (self.k - 1)
        return out

    def crossing_radius(self, t):
        """rho with phi(rho) = t, for 0 < t < 1."""
        t = np.asarray(t, dtype=float)
        return np.sqrt(np.clip(1.0 - t ** (1.0 / self.k), 0.0, 1.0))

    # --- d-dimensional integrals of the single bump ----------------------
    def mass_power(self, q: float, d: int) -> float:
        """int |phi|^q dx."""
        return geometry(d).sphere_area * _bump_radial_integral(self.k, q, d - 1, d)

    def gradient_energy(self, p: float, d: int) -> float:
        """int |grad phi|^p dx."""
        return geometry(d).sphere_area * _bump_gradient_integral(self.k, p, d)

    def hardy_self(self, p: float, d: int) -> float:
        """int |phi|^p / |x|^p dx (center at the bump's own origin)."""
        return geometry(d).sphere_area * _bump_radial_integral(self.k, p, d - 1 - p, d)


def default_bump() -> BumpShape:
    return BumpShape(3)


@dataclass(frozen=True)
class BubbleTrial:
    """Sum of disjointly supported bubbles a_j * phi(lam_j (x - c_j e1)).

    kind "multi": identical translated copies (a_j = lam_j = 1).
    kind "dyadic": a_j = 2^j with lam_j = 2^(p* j / d), the scaling that makes
    every term's gradient p-energy and L^(p*) mass identical.
    Functionals are evaluated per term and combined; disjointness makes the
    combination exact rather than asymptotic.
    """

    kind: str
    bump: BumpShape
    n: int
    z_norm: float
    d: int
    p: float
    amplitudes: tuple[float, ...]
    scales: tuple[float, ...]
    centers: tuple[float, ...]

    @property
    def radii(self) -> tuple[float, ...]:
        return tuple(1.0 / lam for lam in self.scales)

    def max_value(self) -> float:
        return max(self.amplitudes)

    def measure_above(self, t: float) -> float:
        """|{ |u| > t }|, exact by disjointness of the supports."""
        ball = geometry(self.d).ball_volume
        total = 0.0
        for a, lam in zip(self.amplitudes, self.scales):
            if t < a:
                total += ball * (self.bump.crossing_radius(t / a) / lam) ** self.d
        return float(total)


def _check_disjoint(n: int, z_norm: float, max_radius: float):
    # supports are balls of radius <= max_radius; consecutive centers sit
    # n*|z| apart, and we demand a factor-2 margin on top of tangency
    if n >= 2 and n * z_norm <= 4.0 * max_radius:
        raise OverlapError(
            f"bubble supports overlap (need N|z| > {4.0 * max_radius}, got {n * z_norm})")


def _z_magnitude(z) -> float:
    arr = np.atleast_1d(np.asarray(z, dtype=float))
    mag = float(np.linalg.norm(arr))
    if mag <= 0:
        raise DomainError("bubble displacement z must be nonzero")
    return mag


def multi_bubble(n: int, bump: BumpShape, z, d: int, p: float = 2.0) -> BubbleTrial:
    """u_N(x) = sum_{j=1..N} phi(x + j N z): identical bubbles drifting apart."""
    if n < 1:
        raise DomainError(f"need at least one bubble, got N={n}")
    z_norm = _z_magnitude(z)
    _check_disjoint(n, z_norm, 1.0)
    centers = tuple(j * n * z_norm for j in range(1, n + 1))
    return BubbleTrial(kind="multi", bump=bump, n=int(n), z_norm=z_norm, d=int(d),
                       p=float(p), amplitudes=(1.0,) * n, scales=(1.0,) * n,
                       centers=centers)


def dyadic_chain(n: int, bump: BumpShape, z, exps: Exponents) -> BubbleTrial:
    """v_N(x) = sum_{j=1..N} 2^j phi(2^(p* j/d) (x + j N z))."""
    if n < 1:
        raise DomainError(f"need at least one bubble, got N={n}")
    z_norm = _z_magnitude(z)
    scales = tuple(2.0 ** (exps.p_star * j / exps.d) for j in range(1, n + 1))
    _check_disjoint(n, z_norm, max(1.0 / min(scales), 0.0))
    amps = tuple(2.0 ** j for j in range(1, n + 1))
    centers = tuple(j * n * z_norm for j in range(1, n + 1))
    return BubbleTrial(kind="dyadic", bump=bump, n=int(n), z_norm=z_norm,
                       d=exps.d, p=exps.p, amplitudes=amps, scales=scales,
                       centers=centers)


@dataclass(frozen=True)
class DirectRadialTrial:
    """A radial function given directly in rho: u(rho) = a * phi(rho / lam).

    Used for rearranged bubble sums and for scale-invariance checks; the
    profile machinery is bypassed because u is bounded at the origin.
    """

    bump: BumpShape
    lam: float
    amplitude: float
    d: int
    p: float

    def u(self, rho):
        return self.amplitude * self.bump.value(np.asarray(rho, dtype=float) / self.lam)

    def u_prime(self, rho):
        return self.amplitude / self.lam * self.bump.slope(np.asarray(rho, dtype=float) / self.lam)

    @property
    def support_radius(self) -> float:
        return self.lam

    def gradient_energy(self) -> float:
        return (self.amplitude ** self.p * self.lam ** (self.d - self.p)
                * self.bump.gradient_energy(self.p, self.d))

    def hardy_at_origin(self) -> float:
        return (self.amplitude ** self.p * self.lam ** (self.d - self.p)
                * self.bump.hardy_self(self.p, self.d))

    def measure_above(self, t: float) -> float:
        if t >= self.amplitude:
            return 0.0
        ball = geometry(self.d).ball_volume
        return float(ball * (self.lam * self.bump.crossing_radius(t / self.amplitude)) ** self.d)


def rearranged(trial: BubbleTrial) -> DirectRadialTrial:
    """Symmetric decreasing rearrangement of a multi-bubble sum.

    The distribution function is N times the bump's, so the rearranged
    crossing radius is N^(1/d) rho_phi(t) and u*(x) = phi(x / N^(1/d)).
    """
    if trial.kind != "multi":
        raise DomainError("closed-form rearrangement implemented for identical bubbles only")
    return DirectRadialTrial(bump=trial.bump, lam=trial.n ** (1.0 / trial.d),
                             amplitude=1.0, d=trial.d, p=trial.p)


# ---------------------------------------------------------------------------
# Euler-Lagrange residual of the scaled sech-power family
# ---------------------------------------------------------------------------

def el_residual(eta: float, d: int, grid: LogGrid, scale_factor: float = 1.0) -> float:
    """Max interior residual of -w'' - (d-1)/rho w' - ((d-2)^2/4)(1-eta^2) w/rho^2 = w^(2*-1)
    for w = scale_factor * (d(d-2) eta^2)^((d-2)/4) * u_eta, normalized by
    max |w^(2*-1)| on the grid.  Derivatives are analytic, so correctly
    scaled profiles resolve to roundoff level.
    """
    if not eta > 0:
        raise DomainError(f"el_residual needs eta > 0, got {eta}")
    if d < 3:
        raise DomainError(f"el_residual needs d >= 3, got {d}")
    m = (d - 2) / 2.0
    kappa = scale_factor * (d * (d - 2) * eta * eta) ** ((d - 2) / 4.0)
    two_star = 2.0 * d / (d - 2.0)

    s = grid.points()[1:-1]
    rho = np.exp(s)
    g = rho ** (1.0 - eta) + rho ** (1.0 + eta)
    g1 = (1.0 - eta) * rho ** (-eta) + (1.0 + eta) * rho ** eta
    g2 = -eta * (1.0 - eta) * rho ** (-eta - 1.0) + eta * (1.0 + eta) * rho ** (eta - 1.0)

    w = kappa * g ** (-m)
    w1 = -kappa * m * g ** (-m - 1.0) * g1
    w2 = kappa * (m * (m + 1.0) * g ** (-m - 2.0) * g1 ** 2 - m * g ** (-m - 1.0) * g2)

    nonlinear = w ** (two_star - 1.0)
    residual = (-w2 - (d - 1.0) / rho * w1
                - m * m * (1.0 - eta * eta) * w / rho ** 2 - nonlinear)
    return float(np.max(np.abs(residual)) / np.max(np.abs(nonlinear)))
