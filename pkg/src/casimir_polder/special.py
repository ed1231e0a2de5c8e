"""Sine and cosine integrals and their auxiliary functions.

    Si(z) = int_0^z sin(t)/t dt
    Ci(z) = gamma + ln z + int_0^z (cos t - 1)/t dt
    f(z)  = Ci(z) sin z + (pi/2 - Si(z)) cos z
    g(z)  = -Ci(z) cos z + (pi/2 - Si(z)) sin z

Evaluation strategy (see the kernel modules):

* ``z <= 4``: power series for Si and Ci, f and g from the definitions.
* ``4 < z < 40``: continued fraction for ``e^{iz} E1(iz) = g + i(-f)``, which
  yields f and g directly without cancellation.
* ``z >= 40``: asymptotic series of f and g, truncated at the smallest term.

For ``z > 4`` Si and Ci are reconstructed from f and g, never the other way
round: ``pi/2 - Si(z)`` is tiny at large ``z`` and f, g need full relative
accuracy for the far-zone wall force.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .errors import DomainError

__all__ = [
    "EULER_GAMMA",
    "sin_integral",
    "cos_integral",
    "aux_f",
    "aux_g",
    "aux_fg",
    "aux_fg_array",
    "AuxPair",
]

EULER_GAMMA = 0.57721566490153286061


def _as_float(z, name="z"):
    try:
        z = float(z)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {z!r}") from None
    if math.isnan(z):
        raise DomainError(f"{name} is NaN")
    return z


def sin_integral(z: float) -> float:
    """Sine integral Si(z) for ``z >= 0``.

    The odd extension to negative arguments is deliberately not provided.

    >>> round(sin_integral(1.0), 10)
    0.9460830704
    """
    z = _as_float(z)
    if z < 0:
        raise DomainError(f"sin_integral requires z >= 0, got {z!r}")
    if z == 0:
        return 0.0
    return kernels.si_ci(z)[0]


def cos_integral(z: float) -> float:
    """Cosine integral Ci(z) for ``z > 0``."""
    z = _as_float(z)
    if z <= 0:
        raise DomainError(f"cos_integral requires z > 0 (log singularity at 0), got {z!r}")
    return kernels.si_ci(z)[1]


def aux_f(z: float) -> float:
    """Auxiliary function f(z) for ``z >= 0``; ``f(0) = pi/2``."""
    z = _as_float(z)
    if z < 0:
        raise DomainError(f"aux_f requires z >= 0, got {z!r}")
    if z == 0:
        return 0.5 * math.pi
    return kernels.aux_fg(z)[0]


def aux_g(z: float) -> float:
    """Auxiliary function g(z) for ``z > 0``; diverges like ``-gamma - ln z`` at 0."""
    z = _as_float(z)
    if z <= 0:
        raise DomainError(f"aux_g requires z > 0, got {z!r}")
    return kernels.aux_fg(z)[1]


class AuxPair(NamedTuple):
    """``f`` and ``g`` evaluated at a positive argument ``z``."""

    f: float
    g: float
    z: float


def aux_fg(z: float) -> AuxPair:
    """Both auxiliary functions at once (one kernel call)."""
    z = _as_float(z)
    if z <= 0:
        raise DomainError(f"aux_fg requires z > 0, got {z!r}")
    f, g = kernels.aux_fg(z)
    return AuxPair(f, g, z)


def aux_fg_array(z) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``(f, g)`` over an array of positive arguments."""
    z = np.asarray(z, dtype=float)
    if z.size and not np.all(z > 0):
        raise DomainError("aux_fg_array requires every z > 0")
    f, g = kernels.aux_fg_array(z)
    return f.reshape(z.shape), g.reshape(z.shape)
