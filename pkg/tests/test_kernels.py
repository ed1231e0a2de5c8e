"""Compiled and pure-Python kernels must agree."""
import importlib

import numpy as np
import pytest

from casimir_polder import _pykernels
from casimir_polder.pair import CROSS_COEFF, FREE_COEFF

from .oracles import BRACKET_TABLE

try:
    _ck = importlib.import_module("casimir_polder._ckernels")
except ImportError:
    _ck = None

needs_ext = pytest.mark.skipif(_ck is None, reason="extension not built")


@pytest.mark.parametrize("x,bg,be", BRACKET_TABLE)
def test_brackets_against_mpmath(kernels, x, bg, be):
    k_bg, k_be = kernels.wall_brackets(x)
    assert k_bg == pytest.approx(bg, rel=1e-12)
    # the excited bracket is dominated by ~x^3 sin(2x); compare at that scale
    assert abs(k_be - be) <= 1e-12 * max(abs(be), 8 * np.pi * x**3)


def test_branch_constants_match():
    if _ck is None:
        pytest.skip("extension not built")
    for name in ("SERIES_MAX_Z", "ASYMPTOTIC_MIN_Z", "BRACKET_ASYMPTOTIC_MIN_Z"):
        assert getattr(_ck, name) == getattr(_pykernels, name)


@needs_ext
def test_aux_parity():
    z = np.geomspace(1e-6, 1e7, 3001)
    fp, gp = _pykernels.aux_fg_array(z)
    fc, gc = _ck.aux_fg_array(z)
    np.testing.assert_allclose(fc, fp, rtol=1e-15, atol=0)
    np.testing.assert_allclose(gc, gp, rtol=1e-15, atol=0)


@needs_ext
def test_bracket_parity():
    x = np.geomspace(1e-5, 1e5, 2001)
    for a, b in zip(_pykernels.wall_brackets_array(x), _ck.wall_brackets_array(x)):
        np.testing.assert_allclose(b, a, rtol=1e-14, atol=0)


@needs_ext
def test_pair_parity():
    rng = np.random.default_rng(7)
    za, zb, rho = rng.uniform(0.01, 10, (3, 500))
    p = _pykernels.pair_total_array(za, zb, rho, FREE_COEFF, CROSS_COEFF)
    c = _ck.pair_total_array(za, zb, rho, FREE_COEFF, CROSS_COEFF)
    np.testing.assert_allclose(c, p, rtol=1e-15, atol=0)
    for i in range(20):
        assert _ck.pair_terms(za[i], zb[i], rho[i], FREE_COEFF, CROSS_COEFF) == pytest.approx(
            _pykernels.pair_terms(za[i], zb[i], rho[i], FREE_COEFF, CROSS_COEFF), rel=1e-15)


def test_backend_selection_env(monkeypatch):
    import subprocess
    import sys

    code = "import casimir_polder; print(casimir_polder.BACKEND)"
    env = {"CASIMIR_POLDER_BACKEND": "python"}
    out = subprocess.run([sys.executable, "-c", code], env={**__import__("os").environ, **env},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env = {"CASIMIR_POLDER_BACKEND": "bogus"}
    res = subprocess.run([sys.executable, "-c", code], env={**__import__("os").environ, **env},
                         capture_output=True, text=True)
    assert res.returncode != 0 and "CASIMIR_POLDER_BACKEND" in res.stderr
