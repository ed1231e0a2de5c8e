"""Two ground-state atoms in front of a perfectly conducting plate.

The plate is the plane ``height = 0``.  Atom A sits at ``(0, 0, z_a)`` and atom
B at ``(rho, 0, z_b)``.  The image of A is at ``(0, 0, -z_a)``; ``R`` is the
A-B distance and ``R_bar`` the distance from B to the image of A.

The far-zone potential has three pieces: the free-space ``R**-7`` term, the
same law for the atom-image distance, and a mixed term in ``R`` and
``R_bar`` (see :func:`pair_potential_far`).  Energies are in reduced units
(hbar = c = 1) and multiply ``alpha_A(0) * alpha_B(0)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from ._backend import kernels
from .errors import DomainError, NumericError
from .numdiff import DerivativeEstimate, richardson_central
from .units import AtomSpec

__all__ = [
    "FREE_COEFF",
    "CROSS_COEFF",
    "FAR_ZONE_MIN_KR",
    "REFLECTION",
    "PairConfiguration",
    "GeometryFrame",
    "PotentialResult",
    "DipoleTensor",
    "geometry_frame",
    "pair_potential_far",
    "pair_potential_total_array",
    "dipole_tensor",
    "pair_force",
    "attractivity_scan",
    "quasi_random_configurations",
    "recession_profile",
]

FREE_COEFF = 23.0 / (4.0 * math.pi)
CROSS_COEFF = 8.0 / math.pi
# Far-zone formula flagged as outside validity when k0 * R drops below this.
FAR_ZONE_MIN_KR = 10.0
# Image of a dipole: parallel components reversed, normal component kept.
REFLECTION = np.diag([-1.0, -1.0, 1.0])

_FD_STEP = 1e-5


def _positive(name, value):
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class PairConfiguration:
    """Heights of both atoms above the plate and their lateral separation."""

    z_a: float
    z_b: float
    rho: float = 0.0

    def __post_init__(self):
        _positive("z_a", self.z_a)
        _positive("z_b", self.z_b)
        if not (self.rho >= 0 and math.isfinite(self.rho)):
            raise DomainError(f"rho must be non-negative and finite, got {self.rho!r}")
        if self.rho == 0 and self.z_a == self.z_b:
            raise DomainError("atoms coincide (rho = 0 and z_a = z_b)")

    @property
    def position_a(self) -> np.ndarray:
        return np.array([0.0, 0.0, self.z_a])

    @property
    def position_b(self) -> np.ndarray:
        return np.array([self.rho, 0.0, self.z_b])

    @classmethod
    def from_positions(cls, r_a, r_b) -> "PairConfiguration":
        r_a = np.asarray(r_a, dtype=float)
        r_b = np.asarray(r_b, dtype=float)
        rho = math.hypot(r_b[0] - r_a[0], r_b[1] - r_a[1])
        return cls(z_a=float(r_a[2]), z_b=float(r_b[2]), rho=rho)

    def swapped(self) -> "PairConfiguration":
        return PairConfiguration(z_a=self.z_b, z_b=self.z_a, rho=self.rho)


@dataclass(frozen=True)
class GeometryFrame:
    R: float
    R_bar: float
    sin2_theta: float
    sin2_theta_bar: float


def geometry_frame(config: PairConfiguration) -> GeometryFrame:
    """Distances and squared sines of the angles to the plate normal."""
    rho2 = config.rho * config.rho
    dz = config.z_a - config.z_b
    sz = config.z_a + config.z_b
    R2 = rho2 + dz * dz
    Rb2 = rho2 + sz * sz
    if R2 == 0:
        raise DomainError("atoms coincide")
    if rho2 == 0:
        s, sb = 0.0, 0.0
    else:
        s, sb = rho2 / R2, rho2 / Rb2
    return GeometryFrame(R=math.sqrt(R2), R_bar=math.sqrt(Rb2), sin2_theta=s, sin2_theta_bar=sb)


@dataclass(frozen=True)
class PotentialResult:
    """Pair potential split into its three contributions.

    ``valid`` is False when ``k0 * R < FAR_ZONE_MIN_KR`` for either atom; the
    value is still computed.
    """

    total: float
    term_free: float
    term_image: float
    term_cross: float
    valid: bool = True
    note: str = ""


def pair_potential_far(atom_a: AtomSpec, atom_b: AtomSpec, config: PairConfiguration) -> PotentialResult:
    """Far-zone Casimir-Polder energy of two atoms near the plate.

    ::

        U = -(23/4pi) aA aB / R^7 - (23/4pi) aA aB / Rb^7
            + (8/pi) aA aB / (R^3 Rb^3 (R+Rb)^5)
              * [R^4 s + 5 R^3 Rb s + R^2 Rb^2 (6 + s + sb) + 5 R Rb^3 sb + Rb^4 sb]

    with ``s = sin^2(theta)``, ``sb = sin^2(theta_bar)``.
    """
    a_prod = atom_a.alpha0 * atom_b.alpha0
    free, image, cross = kernels.pair_terms(config.z_a, config.z_b, config.rho, FREE_COEFF, CROSS_COEFF)
    free *= a_prod
    image *= a_prod
    cross *= a_prod
    R = math.hypot(config.rho, config.z_a - config.z_b)
    kR = min(atom_a.k0, atom_b.k0) * R
    valid = kR >= FAR_ZONE_MIN_KR
    note = "" if valid else f"outside stated validity: k0*R = {kR:.3g} < {FAR_ZONE_MIN_KR:g}"
    return PotentialResult(
        total=free + image + cross,
        term_free=free,
        term_image=image,
        term_cross=cross,
        valid=valid,
        note=note,
    )


def pair_potential_total_array(alpha_product, z_a, z_b, rho) -> np.ndarray:
    """Vectorised total far-zone potential; no validation beyond shape broadcasting."""
    z_a, z_b, rho = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (z_a, z_b, rho)))
    out = kernels.pair_total_array(z_a, z_b, rho, FREE_COEFF, CROSS_COEFF)
    return alpha_product * out.reshape(z_a.shape)


def _static_response(k, vec):
    # (lap delta_lm - d_l d_m) cos(k r)/r, expanded for a radial function phi(r)
    r = float(np.linalg.norm(vec))
    n = vec / r
    ckr, skr = math.cos(k * r), math.sin(k * r)
    phi = ckr / r
    dphi = -k * skr / r - ckr / (r * r)
    d2phi = -k * k * ckr / r + 2.0 * k * skr / (r * r) + 2.0 * ckr / r**3
    nn = np.outer(n, n)
    eye = np.eye(3)
    return -k * k * phi * eye - d2phi * nn - (dphi / r) * (eye - nn)


@dataclass(frozen=True)
class DipoleTensor:
    """Interaction tensor of two oscillating dipoles near the plate (1/length**3).

    ``values = free - REFLECTION @ image``; indices run over (x, y, z) with z
    along the plate normal.
    """

    free: np.ndarray
    image: np.ndarray
    values: np.ndarray = field(repr=False)


def dipole_tensor(k: float, config: PairConfiguration) -> DipoleTensor:
    if not (k >= 0 and math.isfinite(k)):
        raise DomainError(f"k must be non-negative and finite, got {k!r}")
    r_vec = config.position_b - config.position_a
    rb_vec = config.position_b - config.position_a * np.array([1.0, 1.0, -1.0])
    free = _static_response(k, r_vec)
    image = _static_response(k, rb_vec)
    return DipoleTensor(free=free, image=image, values=free - REFLECTION @ image)


def _unit(direction):
    d = np.asarray(direction, dtype=float).reshape(3)
    norm = float(np.linalg.norm(d))
    if not (norm > 0 and math.isfinite(norm)):
        raise DomainError(f"direction must be a non-zero finite 3-vector, got {direction!r}")
    return d / norm


def pair_force(
    atom_a: AtomSpec,
    atom_b: AtomSpec,
    config: PairConfiguration,
    direction,
) -> DerivativeEstimate:
    """Force on atom B along ``direction`` (atom A held fixed), with an error estimate.

    Negative values point against ``direction``.  The central-difference step
    is ``1e-5 * min(R, z_b / |u_z|)`` so that the displaced atom stays well
    above the plate, refined by Richardson extrapolation.
    """
    u = _unit(direction)
    frame = geometry_frame(config)
    # the height only limits steps with a normal component
    reach = config.z_b / abs(u[2]) if u[2] != 0 else math.inf
    h = _FD_STEP * min(frame.R, reach)
    scale = max(frame.R, config.z_b, config.rho)
    if h <= 4.0 * np.finfo(float).eps * scale:
        raise NumericError(
            f"finite-difference step {h:.3g} underflows at scale {scale:.3g} "
            "(atoms too close to each other or to the plate)"
        )
    a_prod = atom_a.alpha0 * atom_b.alpha0

    def energy(t):
        rho = math.hypot(config.rho + t * u[0], t * u[1])
        return pair_potential_total_array(a_prod, config.z_a, config.z_b + t * u[2], rho)

    est = richardson_central(energy, h)
    return DerivativeEstimate(-est.value, est.error)


def quasi_random_configurations(
    n: int,
    z_range=(0.1, 10.0),
    rho_range=(0.0, 10.0),
    seed: int = 0,
) -> list[PairConfiguration]:
    """Scrambled Sobol points over ``(z_a, z_b, rho)``."""
    sampler = qmc.Sobol(d=3, scramble=True, seed=seed)
    pts = sampler.random(n)
    lo = [z_range[0], z_range[0], rho_range[0]]
    hi = [z_range[1], z_range[1], rho_range[1]]
    pts = qmc.scale(pts, lo, hi)
    return [PairConfiguration(float(a), float(b), float(r)) for a, b, r in pts]


@dataclass
class AttractivityReport:
    """Directional forces on atom B over a set of configurations.

    ``radial`` is the component along A->B (moving B away from A), ``lateral``
    the component along increasing ``rho`` (zero by symmetry at ``rho = 0``).
    A radial violation is any point whose force is not negative beyond its
    finite-difference error bar.
    """

    configs: list
    radial: np.ndarray
    radial_error: np.ndarray
    lateral: np.ndarray
    lateral_error: np.ndarray
    failures: dict = field(default_factory=dict)

    @property
    def radial_violations(self) -> list[int]:
        bad = self.radial + self.radial_error >= 0
        return [int(i) for i in np.flatnonzero(bad)]

    @property
    def lateral_violations(self) -> list[int]:
        rho = np.array([c.rho for c in self.configs])
        bad = (rho > 0) & (self.lateral + self.lateral_error >= 0)
        return [int(i) for i in np.flatnonzero(bad)]

    @property
    def all_attractive(self) -> bool:
        return not self.radial_violations and not self.failures


def attractivity_scan(atom_a: AtomSpec, atom_b: AtomSpec, grid) -> AttractivityReport:
    """Check the sign of the interatomic force on every configuration of ``grid``.

    Evaluation is vectorised over the grid; points that cannot be
    differentiated are listed in ``failures`` by index instead of aborting.
    """
    configs = list(grid)
    n = len(configs)
    a_prod = atom_a.alpha0 * atom_b.alpha0
    za = np.array([c.z_a for c in configs], dtype=float)
    zb = np.array([c.z_b for c in configs], dtype=float)
    rho = np.array([c.rho for c in configs], dtype=float)
    R = np.hypot(rho, za - zb)
    with np.errstate(divide="ignore", invalid="ignore"):
        uz_abs = np.where(R > 0, np.abs(zb - za) / R, 0.0)
        reach = np.where(uz_abs > 0, zb / uz_abs, np.inf)
    h = _FD_STEP * np.minimum(R, reach)
    failures = {}
    tiny = h <= 4.0 * np.finfo(float).eps * np.maximum.reduce([R, zb, rho])
    for i in np.flatnonzero(tiny):
        failures[int(i)] = "finite-difference step underflow"
    h = np.where(tiny, np.nan, h)
    with np.errstate(invalid="ignore", divide="ignore"):
        ux = np.where(R > 0, rho / R, 0.0)
        uz = np.where(R > 0, (zb - za) / R, 0.0)

    def radial_energy(t):
        return pair_potential_total_array(a_prod, za, zb + t * uz, np.abs(rho + t * ux))

    def lateral_energy(t):
        return pair_potential_total_array(a_prod, za, zb, np.abs(rho + t))

    rad = richardson_central(radial_energy, h)
    lat = richardson_central(lateral_energy, h)
    radial = -np.asarray(rad.value, dtype=float).reshape(n)
    lateral = -np.asarray(lat.value, dtype=float).reshape(n)
    for i in np.flatnonzero(~np.isfinite(radial)):
        failures.setdefault(int(i), "non-finite force")
    return AttractivityReport(
        configs=configs,
        radial=radial,
        radial_error=np.asarray(rad.error, dtype=float).reshape(n),
        lateral=lateral,
        lateral_error=np.asarray(lat.error, dtype=float).reshape(n),
        failures=failures,
    )


@dataclass(frozen=True)
class RecessionProfile:
    shifts: np.ndarray
    totals: np.ndarray
    term_free: float
    monotone: bool
    direction: str


def recession_profile(atom_a: AtomSpec, atom_b: AtomSpec, config: PairConfiguration, shifts) -> RecessionProfile:
    """Total potential as the rigid pair is lifted away from the plate.

    ``R`` stays fixed, so the free-space term is constant; ``direction`` tells
    whether the total rises or falls towards it ("mixed" if neither).
    This is an empirical diagnostic, nothing here asserts monotonicity.
    """
    shifts = np.asarray(shifts, dtype=float)
    if shifts.ndim != 1 or np.any(np.diff(shifts) <= 0) or shifts[0] < 0:
        raise DomainError("shifts must be a strictly increasing sequence of non-negative values")
    a_prod = atom_a.alpha0 * atom_b.alpha0
    totals = pair_potential_total_array(a_prod, config.z_a + shifts, config.z_b + shifts, config.rho)
    steps = np.diff(totals)
    if np.all(steps <= 0):
        direction = "decreasing"
    elif np.all(steps >= 0):
        direction = "increasing"
    else:
        direction = "mixed"
    free = pair_potential_far(atom_a, atom_b, config).term_free
    return RecessionProfile(shifts, totals, free, direction != "mixed", direction)
