import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_polder import DomainError
from casimir_polder.special import (
    EULER_GAMMA,
    aux_f,
    aux_fg,
    aux_fg_array,
    aux_g,
    cos_integral,
    sin_integral,
)

from .oracles import CI_1_SERIES, SI_1_SERIES, SPECIAL_TABLE

TABLE_IDS = [f"z={row[0]:g}" for row in SPECIAL_TABLE]


def _kernel_si_ci(kernels, z):
    return kernels.si_ci(z)


@pytest.mark.parametrize("row", SPECIAL_TABLE, ids=TABLE_IDS)
def test_kernels_against_mpmath(kernels, row):
    z, si, ci, f, g = row
    k_si, k_ci = kernels.si_ci(z)
    k_f, k_g = kernels.aux_fg(z)
    assert k_f == pytest.approx(f, rel=1e-13)
    assert k_g == pytest.approx(g, rel=1e-13)
    assert k_si == pytest.approx(si, rel=1e-13)
    # Ci has zeros on the real line; compare absolutely at the function's scale
    assert abs(k_ci - ci) <= 1e-13 * max(abs(ci), 1.0 / z if z > 1 else 1.0)


def test_series_oracle_values():
    assert SI_1_SERIES == pytest.approx(0.9460830704, abs=5e-11)
    assert CI_1_SERIES == pytest.approx(0.3374039229, abs=5e-11)
    assert sin_integral(1.0) == pytest.approx(SI_1_SERIES, rel=1e-15)
    assert cos_integral(1.0) == pytest.approx(CI_1_SERIES, rel=1e-15)


def test_aux_values_at_one():
    assert aux_f(1.0) == pytest.approx(0.6214496243, rel=1e-9)
    # f(1) and g(1) rebuilt from the series oracle values for Si(1), Ci(1)
    s, c = math.sin(1.0), math.cos(1.0)
    assert aux_f(1.0) == pytest.approx(CI_1_SERIES * s + (math.pi / 2 - SI_1_SERIES) * c, rel=1e-14)
    assert aux_g(1.0) == pytest.approx(-CI_1_SERIES * c + (math.pi / 2 - SI_1_SERIES) * s, rel=1e-14)
    assert aux_g(1.0) == pytest.approx(0.34337796155642703, rel=1e-14)


def test_trivial_limits():
    assert sin_integral(0.0) == 0.0
    assert aux_f(0.0) == math.pi / 2
    assert sin_integral(1e6) == pytest.approx(math.pi / 2, abs=1e-5)
    assert cos_integral(1e6) == pytest.approx(0.0, abs=1e-5)
    assert aux_f(1e6) == pytest.approx(1e-6, rel=1e-5)
    assert aux_g(1e6) == pytest.approx(1e-12, rel=1e-4)


def test_small_argument_forms():
    z = 1e-8
    assert cos_integral(z) == pytest.approx(EULER_GAMMA - 8 * math.log(10), abs=1e-8)
    assert aux_g(z) == pytest.approx(-(EULER_GAMMA + math.log(z)), abs=1e-6)


def test_euler_constant_digits():
    assert f"{EULER_GAMMA:.17f}" == "0.57721566490153287"


@pytest.mark.parametrize("fn,bad", [(sin_integral, -1e-3), (cos_integral, 0.0), (cos_integral, -2.0),
                                    (aux_f, -1.0), (aux_g, 0.0), (aux_g, -1.0), (aux_fg, 0.0),
                                    (sin_integral, math.nan), (aux_f, "x")])
def test_domain_errors(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


@pytest.mark.parametrize("z", [0.1, 0.5, 1, 2, 5, 10, 50])
def test_derivative_identities(z):
    h = 1e-6 * max(1.0, z)
    df = (aux_f(z + h) - aux_f(z - h)) / (2 * h)
    dg = (aux_g(z + h) - aux_g(z - h)) / (2 * h)
    assert df == pytest.approx(-aux_g(z), rel=1e-6)
    assert dg == pytest.approx(aux_f(z) - 1 / z, rel=1e-6)


@pytest.mark.parametrize("z", np.geomspace(1e-2, 1e2, 41))
def test_defining_combination(z):
    si, ci = sin_integral(z), cos_integral(z)
    f = ci * math.sin(z) + (math.pi / 2 - si) * math.cos(z)
    g = -ci * math.cos(z) + (math.pi / 2 - si) * math.sin(z)
    assert aux_f(z) == pytest.approx(f, rel=1e-9)
    assert aux_g(z) == pytest.approx(g, rel=1e-9)


def test_positivity_and_monotone_f():
    z = np.geomspace(1e-3, 1e3, 2001)
    f, g = aux_fg_array(z)
    assert np.all(f > 0) and np.all(g > 0)
    assert np.all(f <= math.pi / 2)
    assert np.all(np.diff(f) < 0)


@given(st.floats(min_value=10, max_value=1e3))
def test_asymptotic_sandwich(z):
    f, g = aux_f(z), aux_g(z)
    assert 1 / z - 2 / z**3 < f < 1 / z
    assert g < 1 / z**2


@given(st.floats(min_value=1e3, max_value=1e8))
def test_asymptotic_sandwich_far(z):
    # the gap to the lower bound (24/z^5) drops below one ulp of f here
    f, g = aux_f(z), aux_g(z)
    ulp = math.ulp(1 / z)
    assert 1 / z - 2 / z**3 - ulp <= f < 1 / z
    assert g < 1 / z**2


@settings(max_examples=200)
@given(st.floats(min_value=1e-6, max_value=1e6))
def test_scalar_and_array_agree(z):
    f, g = aux_fg_array(np.array([z]))
    assert (f[0], g[0]) == tuple(aux_fg(z))[:2]


def test_aux_pair_fields():
    pair = aux_fg(2.0)
    assert pair.z == 2.0 and pair.f == aux_f(2.0) and pair.g == aux_g(2.0)


def test_array_shape_preserved():
    f, g = aux_fg_array(np.full((2, 3), 1.5))
    assert f.shape == (2, 3) and g.shape == (2, 3)
    with pytest.raises(DomainError):
        aux_fg_array([1.0, 0.0])


def test_branch_continuity(kernels):
    # no jumps across the series / continued fraction / asymptotic switches
    for edge in (kernels.SERIES_MAX_Z, kernels.ASYMPTOTIC_MIN_Z):
        lo = kernels.aux_fg(edge * (1 - 1e-12))
        hi = kernels.aux_fg(edge * (1 + 1e-12))
        assert lo[0] == pytest.approx(hi[0], rel=1e-12)
        assert lo[1] == pytest.approx(hi[1], rel=1e-12)


def test_infinite_argument(kernels):
    assert kernels.aux_fg(math.inf) == (0.0, 0.0)
    assert kernels.si_ci(math.inf) == (math.pi / 2, 0.0)
