"""Quantum fluctuations of the atom-wall force under a finite measurement time.

A force measured with an instrument of response time ``T`` has a relative
fluctuation governed by ``x = d / (c T)``:

* ``x << 1`` (long measurement): ``dF/|F| ~ x**6``
* ``x >> 1`` (short measurement): ``dF/|F| ~ x**5``

Only the scaling is known, so prefactors are set to one and every report
carries an order-of-magnitude caveat.  Between ``x = 1/2`` and ``x = 2`` no
law applies and the report gives the interval spanned by both.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .units import AtomSpec
from .wall import wall_force_far_ground

__all__ = [
    "LONG_MAX_X",
    "SHORT_MIN_X",
    "OBSERVABLE_THRESHOLD",
    "CAVEAT",
    "InstrumentSpec",
    "FluctuationReport",
    "FeasibilityReport",
    "crossover_time",
    "relative_fluctuation",
    "feasibility_report",
]

LONG_MAX_X = 0.5
SHORT_MIN_X = 2.0
# Reporting convenience, not a physical threshold.
OBSERVABLE_THRESHOLD = 1e-2

CAVEAT = (
    "order-of-magnitude estimate: power laws (d/cT)^6 and (d/cT)^5 taken with unit prefactors"
)


def _positive(name, value):
    try:
        ok = value > 0 and math.isfinite(value)
    except TypeError:
        ok = False
    if not ok:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class InstrumentSpec:
    """Force meter with a Lorentzian response of width ``T`` (reduced time)."""

    T: float
    response_shape: str = "lorentzian"

    def __post_init__(self):
        _positive("T", self.T)
        if self.response_shape != "lorentzian":
            raise DomainError(f"only the 'lorentzian' response is supported, got {self.response_shape!r}")

    def response(self, t: float) -> float:
        return self.T / (math.pi * (t * t + self.T * self.T))

    def cutoff(self, omega: float) -> float:
        """Fourier transform of the response, ``exp(-omega T)`` for ``omega >= 0``."""
        return math.exp(-omega * self.T)


def crossover_time(d: float) -> float:
    """Measurement time ``d / c`` separating the two regimes (reduced units)."""
    return _positive("d", d)


@dataclass(frozen=True)
class FluctuationReport:
    d: float
    T: float
    x: float
    regime: str
    bounds: tuple
    observable: bool
    caveat: str = CAVEAT

    @property
    def relative_fluctuation(self):
        """A number outside the crossover band, the ``(low, high)`` interval inside it."""
        lo, hi = self.bounds
        return lo if self.regime != "crossover" else (lo, hi)


def relative_fluctuation(d: float, T: float) -> FluctuationReport:
    d = _positive("d", d)
    T = _positive("T", T)
    x = d / T
    if x < LONG_MAX_X:
        regime = "long_measurement"
        value = x**6
        bounds = (value, value)
    elif x > SHORT_MIN_X:
        regime = "short_measurement"
        value = x**5
        bounds = (value, value)
    else:
        regime = "crossover"
        bounds = (min(x**5, x**6), max(x**5, x**6))
    return FluctuationReport(
        d=d,
        T=T,
        x=x,
        regime=regime,
        bounds=bounds,
        observable=bounds[1] >= OBSERVABLE_THRESHOLD,
    )


@dataclass(frozen=True)
class FeasibilityReport:
    d: float
    T: float
    mean_force: float
    crossover_time: float
    fluctuation: FluctuationReport
    absolute_fluctuation: tuple
    caveat: str = CAVEAT

    @property
    def regime(self) -> str:
        return self.fluctuation.regime

    @property
    def observable(self) -> bool:
        return self.fluctuation.observable


def feasibility_report(d: float, instrument: InstrumentSpec, atom: AtomSpec) -> FeasibilityReport:
    """Mean far-zone force, crossover time and expected fluctuation for one setup."""
    fl = relative_fluctuation(d, instrument.T)
    mean = wall_force_far_ground(atom, d)
    lo, hi = fl.bounds
    return FeasibilityReport(
        d=fl.d,
        T=fl.T,
        mean_force=mean,
        crossover_time=crossover_time(d),
        fluctuation=fl,
        absolute_fluctuation=(abs(mean) * lo, abs(mean) * hi),
    )
