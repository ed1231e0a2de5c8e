"""Central differences with Richardson refinement."""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np


class DerivativeEstimate(NamedTuple):
    value: float
    error: float


def richardson_central(func: Callable, h, levels: int = 3) -> DerivativeEstimate:
    """Derivative at ``t = 0`` of ``func(t)`` from central differences.

    Differences at steps ``h, h/2, ..., h/2**(levels-1)`` are combined in a
    Richardson tableau (even error expansion).  The error estimate is the
    larger of the last two tableau corrections.  ``func`` and ``h`` may be
    numpy arrays, in which case everything is evaluated elementwise.
    """
    if levels < 2:
        raise ValueError("levels must be >= 2")
    h = np.asarray(h, dtype=float)
    rows = []
    for i in range(levels):
        hi = h / 2.0**i
        row = [(np.asarray(func(hi)) - np.asarray(func(-hi))) / (2.0 * hi)]
        fac = 4.0
        for j in range(1, i + 1):
            row.append(row[j - 1] + (row[j - 1] - rows[i - 1][j - 1]) / (fac - 1.0))
            fac *= 4.0
        rows.append(row)
    best = rows[-1][-1]
    err = np.maximum(np.abs(best - rows[-1][-2]), np.abs(best - rows[-2][-1]))
    if best.ndim == 0:
        return DerivativeEstimate(float(best), float(err))
    return DerivativeEstimate(best, err)
