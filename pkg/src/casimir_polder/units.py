"""Unit system and atom specifications.

Everything inside the package works in reduced units with hbar = c = 1 and a
user-selected base length (one micrometre by default).  Lengths are in units
of the base length, energies in hbar*c/base_length, forces in
hbar*c/base_length**2 and times in base_length/c.  Polarizabilities follow the
Gaussian convention (length**3), so no 4*pi*eps0 factors appear anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import constants

from .errors import DomainError

__all__ = [
    "UnitSystem",
    "DEFAULT_UNITS",
    "AtomSpec",
    "make_two_level_atom",
    "to_si",
    "from_si",
]

HBAR_C = constants.hbar * constants.c  # J m

_KINDS = ("energy", "force", "length", "time")


@dataclass(frozen=True)
class UnitSystem:
    """Reduced-unit system anchored to ``base_length`` metres."""

    base_length: float = 1e-6

    def __post_init__(self):
        if not (self.base_length > 0 and math.isfinite(self.base_length)):
            raise DomainError(f"base_length must be positive and finite, got {self.base_length!r}")

    def scale(self, kind: str) -> float:
        """SI value of one reduced unit of ``kind``."""
        L = self.base_length
        if kind == "length":
            return L
        if kind == "time":
            return L / constants.c
        if kind == "energy":
            return HBAR_C / L
        if kind == "force":
            return HBAR_C / (L * L)
        raise DomainError(f"unknown quantity kind {kind!r}; expected one of {', '.join(_KINDS)}")

    def to_si(self, value, kind: str):
        return value * self.scale(kind)

    def from_si(self, value, kind: str):
        return value / self.scale(kind)


DEFAULT_UNITS = UnitSystem()


def to_si(value, kind: str, units: UnitSystem = DEFAULT_UNITS):
    """Convert a reduced quantity to SI (m, s, J, N)."""
    return units.to_si(value, kind)


def from_si(value, kind: str, units: UnitSystem = DEFAULT_UNITS):
    """Convert an SI quantity to reduced units."""
    return units.from_si(value, kind)


def _check_positive(name, value):
    try:
        ok = value > 0 and math.isfinite(value)
    except TypeError:
        ok = False
    if not ok:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class AtomSpec:
    """Isotropic two-level atom in reduced units.

    Attributes
    ----------
    alpha0 : float
        Static polarizability (length**3).
    k0 : float
        Transition wavenumber (1/length).
    mu_sq : float
        Squared transition dipole moment (energy * length**3).
    label : str
        Free text.  Atoms built with :meth:`override` carry an
        ``[override]`` marker here.

    Use :func:`make_two_level_atom` or :meth:`from_polarizability` to get a
    spec obeying ``alpha0 = 2 mu_sq / (3 k0)``.
    """

    alpha0: float
    k0: float
    mu_sq: float
    label: str = ""

    def __post_init__(self):
        for name in ("alpha0", "k0", "mu_sq"):
            _check_positive(name, getattr(self, name))

    @property
    def consistent(self) -> bool:
        return abs(3.0 * self.k0 * self.alpha0 / (2.0 * self.mu_sq) - 1.0) <= 1e-10

    @classmethod
    def from_polarizability(cls, alpha0: float, k0: float, label: str = "") -> "AtomSpec":
        """Two-level atom with the dipole moment implied by ``alpha0`` and ``k0``."""
        _check_positive("alpha0", alpha0)
        _check_positive("k0", k0)
        return cls(alpha0=alpha0, k0=k0, mu_sq=1.5 * k0 * alpha0, label=label)

    @classmethod
    def override(cls, alpha0: float, k0: float, mu_sq: float, label: str = "") -> "AtomSpec":
        """Atom whose polarizability need not match ``(mu_sq, k0)``."""
        tag = "[override]"
        label = f"{tag} {label}".strip() if tag not in label else label
        return cls(alpha0=alpha0, k0=k0, mu_sq=mu_sq, label=label)


def make_two_level_atom(mu_sq: float, k0: float, label: str = "") -> AtomSpec:
    """Build a two-level atom from its dipole strength and transition wavenumber.

    The static polarizability follows as ``alpha0 = 2 mu_sq / (3 k0)``.

    >>> make_two_level_atom(1.5, 1.0).alpha0
    1.0
    """
    _check_positive("mu_sq", mu_sq)
    _check_positive("k0", k0)
    return AtomSpec(alpha0=2.0 * mu_sq / (3.0 * k0), k0=k0, mu_sq=mu_sq, label=label)
