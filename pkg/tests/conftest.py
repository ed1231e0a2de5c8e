import importlib

import pytest

from casimir_polder import make_two_level_atom
from casimir_polder.units import AtomSpec


def _backend_params():
    params = [pytest.param(importlib.import_module("casimir_polder._pykernels"), id="python")]
    try:
        ck = importlib.import_module("casimir_polder._ckernels")
    except ImportError:
        params.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    else:
        params.append(pytest.param(ck, id="cython"))
    return params


@pytest.fixture(params=_backend_params())
def kernels(request):
    """Each available kernel implementation in turn."""
    return request.param


@pytest.fixture
def unit_atom():
    """Two-level atom with mu^2 = k0 = 1 (alpha0 = 2/3)."""
    return make_two_level_atom(1.0, 1.0)


@pytest.fixture
def pol_atom():
    """Atom with alpha0 = k0 = 1."""
    return AtomSpec.from_polarizability(1.0, 1.0)
