"""Casimir-Polder dispersion forces near a perfectly conducting plate.

Modules
-------
units
    Reduced units (hbar = c = 1) and two-level atom specifications.
special
    Sine/cosine integrals and the auxiliary functions f, g.
pair
    Far-zone potential of two atoms in front of the plate, dipole tensor,
    forces and the attractivity scan.
wall
    Ground- and excited-state atom-wall forces and energies.
fluctuations
    Force-fluctuation regimes under a finite measurement time.
cli
    Parameter sweeps and reports from the command line.

The numerical kernels come either from a compiled extension or a pure-Python
fallback; :data:`BACKEND` says which one was loaded.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .errors import CasimirPolderError, ConfigurationError, DomainError, NumericError
from .fluctuations import InstrumentSpec, crossover_time, feasibility_report, relative_fluctuation
from .pair import (
    PairConfiguration,
    attractivity_scan,
    dipole_tensor,
    geometry_frame,
    pair_force,
    pair_potential_far,
)
from .special import aux_f, aux_g, cos_integral, sin_integral
from .units import AtomSpec, UnitSystem, from_si, make_two_level_atom, to_si
from .wall import (
    wall_energy,
    wall_force,
    wall_force_excited,
    wall_force_far_ground,
    wall_force_ground,
    zero_crossings,
    zero_crossings_excited,
)

__all__ = [
    "BACKEND",
    "AtomSpec",
    "CasimirPolderError",
    "ConfigurationError",
    "DomainError",
    "InstrumentSpec",
    "NumericError",
    "PairConfiguration",
    "UnitSystem",
    "attractivity_scan",
    "aux_f",
    "aux_g",
    "cos_integral",
    "crossover_time",
    "dipole_tensor",
    "feasibility_report",
    "from_si",
    "geometry_frame",
    "make_two_level_atom",
    "pair_force",
    "pair_potential_far",
    "relative_fluctuation",
    "sin_integral",
    "to_si",
    "wall_energy",
    "wall_force",
    "wall_force_excited",
    "wall_force_far_ground",
    "wall_force_ground",
    "zero_crossings",
    "zero_crossings_excited",
]
