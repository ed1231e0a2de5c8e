"""Atom-wall Casimir-Polder force for a two-level atom at arbitrary distance.

With ``x = k0 d`` and ``z = 2x``::

    F_g = -mu^2/(12 pi d^4) [8x - 6(2x^2-1) f(z) - 4x(2x^2-3) g(z)]
    F_e = +mu^2/(12 pi d^4) [8x - 6(2x^2-1)(f(z) - pi cos z)
                                - 4x(2x^2-3)(g(z) - pi sin z)]

Negative force means attraction towards the wall.  The ground-state force
goes over to ``-mu^2/(4 d^4)`` close to the wall and to ``-3 alpha0/(2 pi d^5)``
far from it.  The excited-state force oscillates with period ``pi/k0`` in
``d`` far from the wall.

The two-level model ignores the known subtleties of level shifts near an
interface; no correction for them is applied.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ._backend import kernels
from .errors import ConfigurationError, DomainError, NumericError
from .units import AtomSpec

__all__ = [
    "NEAR_ZONE_MAX_Z",
    "FAR_ZONE_MIN_Z",
    "WallForceResult",
    "ZeroCrossing",
    "regime_for",
    "wall_force_ground",
    "wall_force_excited",
    "wall_force",
    "wall_force_array",
    "wall_force_far_ground",
    "wall_energy",
    "zero_crossings",
    "zero_crossings_excited",
]

# Reporting thresholds on z = 2 k0 d; they carry no physical meaning.
NEAR_ZONE_MAX_Z = 0.1
FAR_ZONE_MIN_Z = 10.0

_STATES = ("ground", "excited")


def regime_for(z: float) -> str:
    if z < NEAR_ZONE_MAX_Z:
        return "near"
    if z > FAR_ZONE_MIN_Z:
        return "far"
    return "intermediate"


@dataclass(frozen=True)
class WallForceResult:
    force: float
    d: float
    z: float
    regime: str


def _check_distance(d):
    try:
        ok = d > 0 and math.isfinite(d)
    except TypeError:
        ok = False
    if not ok:
        raise DomainError(f"atom-wall distance d must be positive and finite, got {d!r}")
    return float(d)


def _check_state(state):
    if state not in _STATES:
        raise DomainError(f"state must be 'ground' or 'excited', got {state!r}")


def wall_force(atom: AtomSpec, d: float, state: str = "ground") -> WallForceResult:
    d = _check_distance(d)
    _check_state(state)
    x = atom.k0 * d
    b_ground, b_excited = kernels.wall_brackets(x)
    prefactor = atom.mu_sq / (12.0 * math.pi * d**4)
    force = -prefactor * b_ground if state == "ground" else prefactor * b_excited
    z = 2.0 * x
    return WallForceResult(force=force, d=d, z=z, regime=regime_for(z))


def wall_force_ground(atom: AtomSpec, d: float) -> WallForceResult:
    """Force on a ground-state atom at distance ``d`` from the wall."""
    return wall_force(atom, d, "ground")


def wall_force_excited(atom: AtomSpec, d: float) -> WallForceResult:
    """Force on an excited-state atom at distance ``d`` from the wall."""
    return wall_force(atom, d, "excited")


def wall_force_array(atom: AtomSpec, d, state: str = "ground") -> np.ndarray:
    """Vectorised force (no per-point annotation)."""
    _check_state(state)
    d = np.asarray(d, dtype=float)
    if d.size and not np.all((d > 0) & np.isfinite(d)):
        raise DomainError("every atom-wall distance must be positive and finite")
    b_ground, b_excited = kernels.wall_brackets_array(atom.k0 * d)
    bracket = -b_ground if state == "ground" else b_excited
    return (atom.mu_sq / (12.0 * math.pi * d**4) * bracket.reshape(d.shape))


def wall_force_far_ground(atom: AtomSpec, d: float) -> float:
    """Far-zone limit ``-3 alpha0 / (2 pi d^5)`` of the ground-state force."""
    d = _check_distance(d)
    return -3.0 * atom.alpha0 / (2.0 * math.pi * d**5)


def _bracket_tail(x_tail):
    # int_X^inf B_g(x) x^-4 dx from B_g ~ sum (-1)^m c_m / (2x)^(2m+1)
    total = 0.0
    a = 1.0  # (-1)^m (2m)!
    for m in range(6):
        if m:
            a *= -(2 * m) * (2 * m - 1)
        k = 2 * m + 1
        c = a * (3 * k * (k + 1) + 6 + k * (k + 1) * (k + 2) + 6 * k)
        term = c / 2.0**k / (k + 3) / x_tail ** (k + 3)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def _ground_bracket_integral(x_d, rtol):
    """``int_{x_d}^inf B_g(x) / x^4 dx`` by adaptive quadrature plus an asymptotic tail."""
    x_tail = max(1e3, 1e3 * x_d)

    def integrand(t):
        x = math.exp(t)
        return kernels.wall_brackets(x)[0] * math.exp(-3.0 * t)

    t0, t1 = math.log(x_d), math.log(x_tail)
    edges = np.arange(math.floor(t0 / math.log(10)) + 1, math.ceil(t1 / math.log(10))) * math.log(10)
    points = [t0, *[e for e in edges if t0 < e < t1], t1]
    total = 0.0
    err = 0.0
    for lo, hi in zip(points[:-1], points[1:]):
        val, abserr = integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=1e-13, limit=200)
        total += val
        err += abserr
    total += _bracket_tail(x_tail)
    if not err <= rtol * abs(total):
        raise NumericError(
            f"wall-energy quadrature did not converge: achieved relative error "
            f"{err / abs(total):.2e} > {rtol:.1e}"
        )
    return total


def _oscillatory_antiderivative(x):
    # W with dW/dx = [6(2x^2-1) cos 2x + 4x(2x^2-3) sin 2x] / (12 x^4), in units of mu^2 k0^3
    z = 2.0 * x
    return (-4.0 * math.cos(z) / x + 4.0 * math.sin(z) / x**2 + 2.0 * math.cos(z) / x**3) / 12.0


def wall_energy(atom: AtomSpec, d: float, state: str = "ground", rtol: float = 1e-10) -> float:
    """Atom-wall energy ``U(d) = int_d^inf F(s) ds`` so that ``F = -dU/dd``.

    The ground-state force is integrated numerically up to
    ``d_tail = max(1e3/k0, 1e3 d)`` and the remainder added from the
    large-distance expansion.  The excited-state force differs from minus
    the ground-state one by an oscillatory term with a closed-form
    antiderivative, which is used instead of integrating the oscillations.

    Raises :class:`NumericError` if the quadrature error estimate exceeds
    ``rtol`` relative.
    """
    d = _check_distance(d)
    _check_state(state)
    x_d = atom.k0 * d
    scale = atom.mu_sq * atom.k0**3
    u_ground = -scale / (12.0 * math.pi) * _ground_bracket_integral(x_d, rtol)
    if state == "ground":
        return u_ground
    return -u_ground - scale * _oscillatory_antiderivative(x_d)


@dataclass(frozen=True)
class ZeroCrossing:
    d_zero: float
    bracket: tuple
    refined: bool


def zero_crossings(
    atom: AtomSpec,
    d_min: float,
    d_max: float,
    state: str = "excited",
    n_grid: int | None = None,
    rtol: float = 1e-10,
) -> list[ZeroCrossing]:
    """Sign changes of the wall force on ``[d_min, d_max]``, sorted ascending.

    The interval is scanned on a uniform grid of pitch at most
    ``pi / (32 k0)``; each bracketed sign change is bisected down to a
    relative width ``rtol``.  Passing ``n_grid`` too small for that pitch
    raises :class:`ConfigurationError`.
    """
    d_min = _check_distance(d_min)
    d_max = _check_distance(d_max)
    _check_state(state)
    if not d_min < d_max:
        raise DomainError(f"need d_min < d_max, got {d_min!r} >= {d_max!r}")
    max_pitch = math.pi / (32.0 * atom.k0)
    needed = int(math.ceil((d_max - d_min) / max_pitch)) + 1
    if n_grid is None:
        n_grid = max(needed, 2)
    elif n_grid < 2 or (d_max - d_min) / (n_grid - 1) > max_pitch * (1 + 1e-12):
        raise ConfigurationError(
            f"grid of {n_grid} points on [{d_min:g}, {d_max:g}] is coarser than the "
            f"required pitch pi/(32 k0) = {max_pitch:.3g}; need at least {needed} points"
        )
    if n_grid > 50_000_000:
        raise ConfigurationError(f"search range needs {n_grid} grid points; narrow [d_min, d_max]")
    grid = np.linspace(d_min, d_max, n_grid)
    values = wall_force_array(atom, grid, state)
    sign = np.sign(values)

    def force(d):
        return wall_force(atom, d, state).force

    out = []
    for i in np.flatnonzero(sign == 0):
        out.append(ZeroCrossing(float(grid[i]), (float(grid[i]), float(grid[i])), True))
    for i in np.flatnonzero(sign[:-1] * sign[1:] < 0):
        lo, hi = float(grid[i]), float(grid[i + 1])
        f_lo = values[i]
        refined = False
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if hi - lo <= rtol * mid:
                refined = True
                break
            f_mid = force(mid)
            if f_mid == 0:
                lo = hi = mid
                refined = True
                break
            if (f_mid < 0) == (f_lo < 0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        out.append(ZeroCrossing(0.5 * (lo + hi), (lo, hi), refined))
    out.sort(key=lambda zc: zc.d_zero)
    return out


def zero_crossings_excited(atom: AtomSpec, d_min: float, d_max: float, n_grid: int | None = None) -> list[ZeroCrossing]:
    """Zero crossings of the excited-state force (see :func:`zero_crossings`)."""
    return zero_crossings(atom, d_min, d_max, "excited", n_grid=n_grid)
