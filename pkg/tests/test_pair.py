import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_polder import DomainError, NumericError
from casimir_polder.pair import (
    REFLECTION,
    PairConfiguration,
    attractivity_scan,
    dipole_tensor,
    geometry_frame,
    pair_force,
    pair_potential_far,
    quasi_random_configurations,
    recession_profile,
)
from casimir_polder.units import AtomSpec

FREE = 23 / (4 * math.pi)
ON_PLATE = 13 / (2 * math.pi)

heights = st.floats(min_value=0.05, max_value=50)
laterals = st.floats(min_value=0.0, max_value=50)


def configs():
    return st.tuples(heights, heights, laterals).filter(
        lambda t: math.hypot(t[2], t[0] - t[1]) > 1e-3).map(lambda t: PairConfiguration(*t))


# -- geometry -----------------------------------------------------------------

def test_frame_equal_heights():
    fr = geometry_frame(PairConfiguration(1, 1, 1))
    assert fr.R == 1 and fr.R_bar == pytest.approx(math.sqrt(5), rel=1e-15)
    assert fr.sin2_theta == 1 and fr.sin2_theta_bar == pytest.approx(0.2, rel=1e-15)


def test_frame_stacked():
    fr = geometry_frame(PairConfiguration(1, 2, 0))
    assert (fr.R, fr.R_bar, fr.sin2_theta, fr.sin2_theta_bar) == (1, 3, 0, 0)


def test_frame_plate_removed_limit():
    for h in (1e2, 1e4, 1e6):
        fr = geometry_frame(PairConfiguration(h, h, 1.0))
        assert fr.R_bar / fr.R == pytest.approx(math.sqrt(1 + 4 * h * h), rel=1e-14)
        assert fr.R_bar / fr.R == pytest.approx(2 * h, rel=1 / h**2)
        assert math.isfinite(fr.sin2_theta_bar)


@pytest.mark.parametrize("args", [(0, 1, 1), (1, -1, 1), (1, 1, -0.5), (1, 1, 0), (math.inf, 1, 1)])
def test_invalid_configurations(args):
    with pytest.raises(DomainError):
        PairConfiguration(*args)


@given(configs())
def test_frame_invariants(c):
    fr = geometry_frame(c)
    assert fr.R <= fr.R_bar
    assert 0 <= fr.sin2_theta <= 1 and 0 <= fr.sin2_theta_bar <= 1
    assert fr.R**2 * fr.sin2_theta == pytest.approx(c.rho**2, rel=1e-12, abs=1e-300)
    assert fr.R_bar**2 * fr.sin2_theta_bar == pytest.approx(c.rho**2, rel=1e-12, abs=1e-300)


def test_from_positions_round_trip():
    c = PairConfiguration.from_positions([1.0, 2.0, 0.5], [4.0, 6.0, 1.5])
    assert c == PairConfiguration(0.5, 1.5, 5.0)


# -- potential ----------------------------------------------------------------

def test_free_space_limit(pol_atom):
    res = pair_potential_far(pol_atom, pol_atom, PairConfiguration(1e3, 1e3, 1.0))
    assert res.total == pytest.approx(-FREE, rel=1e-6)
    assert abs(res.total - res.term_free) / abs(res.term_free) < 1e-6


def test_on_plate_closed_form(pol_atom):
    for R in (0.5, 1.0, 3.0):
        res = pair_potential_far(pol_atom, pol_atom, PairConfiguration(1e-9, 1e-9, R))
        assert res.total * R**7 == pytest.approx(-ON_PLATE, abs=1e-12)


def test_on_plate_term_split(pol_atom):
    # R_bar = R, both sines one: bracket = 20 R^4, cross = (5/pi)/R^7
    res = pair_potential_far(pol_atom, pol_atom, PairConfiguration(1e-9, 1e-9, 1.0))
    assert res.term_cross == pytest.approx(5 / math.pi, rel=1e-12)
    assert res.term_image == pytest.approx(-FREE, rel=1e-12)


def test_polarizability_scaling():
    a = AtomSpec.from_polarizability(2.0, 1.0)
    b = AtomSpec.from_polarizability(3.0, 1.0)
    u = AtomSpec.from_polarizability(1.0, 1.0)
    c = PairConfiguration(0.7, 1.3, 0.4)
    assert pair_potential_far(a, b, c).total == pytest.approx(6 * pair_potential_far(u, u, c).total, rel=1e-15)


@given(configs())
def test_decomposition_and_signs(c):
    a = AtomSpec.from_polarizability(1.3, 2.0)
    b = AtomSpec.from_polarizability(0.4, 5.0)
    res = pair_potential_far(a, b, c)
    assert res.total == res.term_free + res.term_image + res.term_cross
    assert res.term_free < 0 and res.term_image < 0 and res.term_cross >= 0


@given(configs())
def test_exchange_symmetry(c):
    a = AtomSpec.from_polarizability(1.3, 2.0)
    b = AtomSpec.from_polarizability(0.4, 5.0)
    t1 = pair_potential_far(a, b, c).total
    t2 = pair_potential_far(b, a, c.swapped()).total
    assert t1 == pytest.approx(t2, rel=1e-15)


@pytest.mark.parametrize("s", [10, 30, 100, 300, 1000])
def test_plate_removed_convergence(pol_atom, s):
    # fixed R = 1 horizontal, R_bar = s
    h = math.sqrt(s**2 - 1) / 2
    res = pair_potential_far(pol_atom, pol_atom, PairConfiguration(h, h, 1.0))
    dev = abs(res.total - res.term_free) / abs(res.term_free)
    assert dev <= 10 * s**-3
    if s >= 100:
        assert dev < 1e-6


def test_validity_flag():
    near = AtomSpec.from_polarizability(1.0, 1.0)
    res = pair_potential_far(near, near, PairConfiguration(1.0, 1.0, 2.0))
    assert not res.valid and "outside stated validity" in res.note
    far = AtomSpec.from_polarizability(1.0, 100.0)
    assert pair_potential_far(far, far, PairConfiguration(1.0, 1.0, 2.0)).valid
    mixed = pair_potential_far(far, near, PairConfiguration(1.0, 1.0, 2.0))
    assert not mixed.valid


def test_recession_profile_is_reported(pol_atom):
    prof = recession_profile(pol_atom, pol_atom, PairConfiguration(1.0, 1.0, 1.0), np.geomspace(1e-3, 1e3, 50))
    assert prof.totals[-1] == pytest.approx(prof.term_free, rel=1e-6)
    assert prof.direction in ("increasing", "decreasing", "mixed")
    assert prof.monotone == (prof.direction != "mixed")
    with pytest.raises(DomainError):
        recession_profile(pol_atom, pol_atom, PairConfiguration(1.0, 1.0, 1.0), [1.0, 0.5])


# -- dipole tensor ------------------------------------------------------------

def _phi(k, r_vec):
    r = np.linalg.norm(r_vec)
    return math.cos(k * r) / r


def _fd_tensor(k, r_vec, h=1e-4):
    """(lap delta - grad grad) cos(kr)/r by central differences of the generating function."""
    hess = np.empty((3, 3))
    e = np.eye(3) * h
    for l in range(3):
        for m in range(3):
            hess[l, m] = (_phi(k, r_vec + e[l] + e[m]) - _phi(k, r_vec + e[l] - e[m])
                          - _phi(k, r_vec - e[l] + e[m]) + _phi(k, r_vec - e[l] - e[m])) / (4 * h * h)
    return np.trace(hess) * np.eye(3) - hess


def test_static_tensor():
    c = PairConfiguration(1e6, 1e6 + 0.3, 0.8)
    r = c.position_b - c.position_a
    R = np.linalg.norm(r)
    n = r / R
    expected = (np.eye(3) - 3 * np.outer(n, n)) / R**3
    np.testing.assert_allclose(dipole_tensor(0.0, c).free, expected, rtol=1e-12, atol=1e-12 / R**3)


def test_free_tensor_on_axis_against_finite_differences():
    c = PairConfiguration(5.0, 5.0, 1.0)  # R-vector (1, 0, 0)
    analytic = dipole_tensor(1.0, c).free
    numeric = _fd_tensor(1.0, np.array([1.0, 0.0, 0.0]))
    np.testing.assert_allclose(analytic, numeric, rtol=1e-6, atol=1e-6)


@pytest.mark.parametrize("seed", range(5))
def test_tensor_against_finite_differences(seed):
    rng = np.random.default_rng(seed)
    za, zb = rng.uniform(0.5, 3, 2)
    rho = rng.uniform(0, 3)
    k = rng.uniform(0, 4)
    c = PairConfiguration(za, zb, rho)
    t = dipole_tensor(k, c)
    image_vec = c.position_b - c.position_a * np.array([1, 1, -1])
    np.testing.assert_allclose(t.free, _fd_tensor(k, c.position_b - c.position_a), rtol=1e-5, atol=1e-6)
    np.testing.assert_allclose(t.image, _fd_tensor(k, image_vec), rtol=1e-5, atol=1e-6)
    np.testing.assert_allclose(t.values, t.free - REFLECTION @ t.image, rtol=1e-15)


@settings(max_examples=50)
@given(configs(), st.floats(min_value=0, max_value=20))
def test_free_tensor_symmetric(c, k):
    t = dipole_tensor(k, c).free
    np.testing.assert_allclose(t, t.T, rtol=1e-14, atol=0)


def test_tensor_domain():
    with pytest.raises(DomainError):
        dipole_tensor(-1.0, PairConfiguration(1, 1, 1))


# -- forces -------------------------------------------------------------------

def test_radial_force_plate_removed(pol_atom):
    for R in (1.0, 2.5):
        est = pair_force(pol_atom, pol_atom, PairConfiguration(1e3, 1e3, R), [1, 0, 0])
        assert est.value == pytest.approx(-7 * FREE / R**8, rel=1e-4)
        assert est.error < 1e-6 * abs(est.value)


def test_tangential_force_vanishes_without_plate(pol_atom):
    # B at (1, 0, h+1) relative to A at height h; tangent to the sphere around A
    c = PairConfiguration(1e4, 1e4 + 1.0, 1.0)
    est = pair_force(pol_atom, pol_atom, c, [1, 0, -1])
    scale = 7 * FREE / math.sqrt(2) ** 8
    assert abs(est.value) <= max(10 * est.error, 1e-9 * scale)


def test_on_plate_lateral_force(pol_atom):
    for R in (1.0, 2.0):
        est = pair_force(pol_atom, pol_atom, PairConfiguration(1e-7, 1e-7, R), [1, 0, 0])
        assert est.value == pytest.approx(-7 * ON_PLATE / R**8, rel=1e-5)


def test_force_matches_potential_difference(pol_atom):
    c = PairConfiguration(0.8, 1.7, 0.9)
    u = np.array([0.3, -0.4, 0.5])
    u /= np.linalg.norm(u)
    est = pair_force(pol_atom, pol_atom, c, u)
    h = 1e-4

    def energy(t):
        rb = c.position_b + t * u
        return pair_potential_far(pol_atom, pol_atom, PairConfiguration.from_positions(c.position_a, rb)).total

    fd = -(energy(h) - energy(-h)) / (2 * h)
    assert est.value == pytest.approx(fd, rel=1e-6)


def test_force_bad_direction(pol_atom):
    with pytest.raises(DomainError):
        pair_force(pol_atom, pol_atom, PairConfiguration(1, 1, 1), [0, 0, 0])


def test_force_step_underflow(pol_atom):
    with pytest.raises(NumericError, match="underflow"):
        pair_force(pol_atom, pol_atom, PairConfiguration(1e5, 1e-300, 1.0), [1, 0, 1])


def test_attractive_single_point(pol_atom):
    rep = attractivity_scan(pol_atom, pol_atom, [PairConfiguration(1, 1, 1)])
    assert rep.radial[0] < 0 and not rep.radial_violations
    direct = pair_force(pol_atom, pol_atom, PairConfiguration(1, 1, 1), [1, 0, 0])
    assert rep.radial[0] == pytest.approx(direct.value, rel=1e-12)


def test_attractive_stacked(pol_atom):
    rep = attractivity_scan(pol_atom, pol_atom, [PairConfiguration(1.0, 2.0, 0.0), PairConfiguration(2.0, 0.5, 0.0)])
    assert np.all(rep.radial < 0)
    assert rep.lateral_violations == []  # rho = 0 has no lateral direction


def test_scan_reports_failures(pol_atom):
    rep = attractivity_scan(pol_atom, pol_atom, [PairConfiguration(1, 1, 1), PairConfiguration(1e5, 1e-300, 1.0)])
    assert 1 in rep.failures and 0 not in rep.failures
    assert not rep.all_attractive


def test_quasi_random_grid_is_deterministic():
    a = quasi_random_configurations(64, seed=3)
    b = quasi_random_configurations(64, seed=3)
    assert a == b
    assert all(0.1 <= c.z_a <= 10 and 0 <= c.rho <= 10 for c in a)
