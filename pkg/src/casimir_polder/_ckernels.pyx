# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same algorithms and branch points as ``_pykernels.py``; keep the two in sync.
No argument validation happens here.
"""
from libc.math cimport sin, cos, log, sqrt, fabs, isinf, M_PI

import numpy as np

cdef double EULER_GAMMA = 0.57721566490153286061
cdef double HALF_PI = 0.5 * M_PI

SERIES_MAX_Z = 4.0
ASYMPTOTIC_MIN_Z = 40.0
BRACKET_ASYMPTOTIC_MIN_Z = 80.0

cdef double _SERIES_MAX_Z = 4.0
cdef double _ASYMPTOTIC_MIN_Z = 40.0
cdef double _BRACKET_ASYMPTOTIC_MIN_Z = 80.0
cdef double _EPS = 1e-17
cdef double _CF_EPS = 3e-16
cdef int _CF_MAXITER = 1000


cdef void _si_ci_series(double z, double* si_out, double* ci_out) noexcept nogil:
    cdef double z2 = z * z
    cdef double t = z
    cdef double si = z
    cdef double term, s
    cdef long n = 0
    while True:
        n += 1
        t *= -z2 / ((2 * n) * (2 * n + 1))
        term = t / (2 * n + 1)
        si += term
        if fabs(term) < _EPS * fabs(si):
            break
    t = 1.0
    s = 0.0
    n = 0
    while True:
        n += 1
        t *= -z2 / ((2 * n - 1) * (2 * n))
        term = t / (2 * n)
        s += term
        if fabs(term) <= _EPS * (fabs(s) if fabs(s) > 1e-300 else 1e-300):
            break
    si_out[0] = si
    ci_out[0] = EULER_GAMMA + log(z) + s


cdef void _fg_continued_fraction(double z, double* f_out, double* g_out) noexcept nogil:
    cdef double b_re = 1.0, b_im = z
    cdef double c_re = 1e300, c_im = 0.0
    cdef double den = b_re * b_re + b_im * b_im
    cdef double d_re = b_re / den, d_im = -b_im / den
    cdef double h_re = d_re, h_im = d_im
    cdef double a, x_re, x_im, del_re, del_im, tmp
    cdef int i
    for i in range(1, _CF_MAXITER):
        a = -(<double>i) * i
        b_re += 2.0
        x_re = a * d_re + b_re
        x_im = a * d_im + b_im
        den = x_re * x_re + x_im * x_im
        d_re = x_re / den
        d_im = -x_im / den
        den = c_re * c_re + c_im * c_im
        c_re = b_re + a * c_re / den
        c_im = b_im - a * c_im / den
        del_re = c_re * d_re - c_im * d_im
        del_im = c_re * d_im + c_im * d_re
        tmp = h_re * del_re - h_im * del_im
        h_im = h_re * del_im + h_im * del_re
        h_re = tmp
        if fabs(del_re - 1.0) + fabs(del_im) < _CF_EPS:
            break
    f_out[0] = -h_im
    g_out[0] = h_re


cdef void _fg_asymptotic(double z, double* f_out, double* g_out) noexcept nogil:
    cdef double iz2 = 1.0 / (z * z)
    cdef double tf = 1.0, sf = 1.0, tg = 1.0, sg = 1.0, nxt
    cdef long n = 0
    while True:
        n += 1
        nxt = -tf * (2 * n) * (2 * n - 1) * iz2
        if fabs(nxt) >= fabs(tf) or fabs(nxt) < _EPS:
            if fabs(nxt) < fabs(tf):
                sf += nxt
            break
        tf = nxt
        sf += tf
    n = 0
    while True:
        n += 1
        nxt = -tg * (2 * n + 1) * (2 * n) * iz2
        if fabs(nxt) >= fabs(tg) or fabs(nxt) < _EPS:
            if fabs(nxt) < fabs(tg):
                sg += nxt
            break
        tg = nxt
        sg += tg
    f_out[0] = sf / z
    g_out[0] = sg * iz2


cdef void _aux_fg(double z, double* f, double* g) noexcept nogil:
    cdef double si, ci, s, c, rest
    if z <= _SERIES_MAX_Z:
        _si_ci_series(z, &si, &ci)
        s = sin(z)
        c = cos(z)
        rest = HALF_PI - si
        f[0] = ci * s + rest * c
        g[0] = -ci * c + rest * s
    elif z < _ASYMPTOTIC_MIN_Z:
        _fg_continued_fraction(z, f, g)
    elif isinf(z):
        f[0] = 0.0
        g[0] = 0.0
    else:
        _fg_asymptotic(z, f, g)


cdef double _ground_bracket_asymptotic(double z) noexcept nogil:
    cdef double iz2 = 1.0 / (z * z)
    cdef double a = 1.0, total = 24.0, prev = 24.0, term, k
    cdef long m = 0
    while True:
        m += 1
        a *= -(2 * m) * (2 * m - 1) * iz2
        k = 2 * m + 1
        term = a * (3 * k * (k + 1) + 6 + k * (k + 1) * (k + 2) + 6 * k)
        if fabs(term) >= fabs(prev):
            break
        total += term
        if fabs(term) < _EPS * fabs(total):
            break
        prev = term
    return total / z


cdef void _wall_brackets(double x, double* bg, double* be) noexcept nogil:
    cdef double z = 2.0 * x
    cdef double p = 2.0 * x * x - 1.0
    cdef double q = x * (2.0 * x * x - 3.0)
    cdef double f, g
    if z > _BRACKET_ASYMPTOTIC_MIN_Z:
        bg[0] = _ground_bracket_asymptotic(z)
    else:
        _aux_fg(z, &f, &g)
        bg[0] = 8.0 * x - 6.0 * p * f - 4.0 * q * g
    be[0] = bg[0] + M_PI * (6.0 * p * cos(z) + 4.0 * q * sin(z))


cdef void _pair_terms(double z_a, double z_b, double rho, double free_coeff,
                      double cross_coeff, double* free, double* image,
                      double* cross) noexcept nogil:
    cdef double rho2 = rho * rho
    cdef double dz = z_a - z_b
    cdef double sz = z_a + z_b
    cdef double R2 = rho2 + dz * dz
    cdef double Rb2 = rho2 + sz * sz
    cdef double R = sqrt(R2)
    cdef double Rb = sqrt(Rb2)
    cdef double s = rho2 / R2 if rho2 > 0.0 else 0.0
    cdef double sb = rho2 / Rb2 if rho2 > 0.0 else 0.0
    cdef double R3 = R2 * R
    cdef double Rb3 = Rb2 * Rb
    cdef double RRb = R + Rb
    cdef double bracket
    free[0] = -free_coeff / (R3 * R3 * R)
    image[0] = -free_coeff / (Rb3 * Rb3 * Rb)
    bracket = (R2 * R2 * s + 5.0 * R3 * Rb * s + R2 * Rb2 * (6.0 + s + sb)
               + 5.0 * R * Rb3 * sb + Rb2 * Rb2 * sb)
    cross[0] = cross_coeff * bracket / (R3 * Rb3 * (RRb * RRb * RRb * RRb * RRb))


def aux_fg(double z):
    """Return ``(f(z), g(z))`` for ``z > 0``."""
    cdef double f, g
    _aux_fg(z, &f, &g)
    return f, g


def si_ci(double z):
    """Return ``(Si(z), Ci(z))`` for ``z > 0``."""
    cdef double si, ci, f, g
    if z <= _SERIES_MAX_Z:
        _si_ci_series(z, &si, &ci)
        return si, ci
    if isinf(z):
        return HALF_PI, 0.0
    _aux_fg(z, &f, &g)
    return HALF_PI - f * cos(z) - g * sin(z), f * sin(z) - g * cos(z)


def wall_brackets(double x):
    """Square brackets of the ground and excited atom-wall force at ``x = k0 d``."""
    cdef double bg, be
    _wall_brackets(x, &bg, &be)
    return bg, be


def pair_terms(double z_a, double z_b, double rho, double free_coeff, double cross_coeff):
    """Free, image and cross terms of the far-zone pair potential per unit alpha_A alpha_B."""
    cdef double a, b, c
    _pair_terms(z_a, z_b, rho, free_coeff, cross_coeff, &a, &b, &c)
    return a, b, c


def aux_fg_array(z):
    cdef double[::1] zv = np.ascontiguousarray(z, dtype=float).ravel()
    cdef Py_ssize_t n = zv.shape[0], i
    f = np.empty(n)
    g = np.empty(n)
    cdef double[::1] fv = f, gv = g
    with nogil:
        for i in range(n):
            _aux_fg(zv[i], &fv[i], &gv[i])
    return f, g


def wall_brackets_array(x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=float).ravel()
    cdef Py_ssize_t n = xv.shape[0], i
    bg = np.empty(n)
    be = np.empty(n)
    cdef double[::1] bgv = bg, bev = be
    with nogil:
        for i in range(n):
            _wall_brackets(xv[i], &bgv[i], &bev[i])
    return bg, be


def pair_total_array(z_a, z_b, rho, double free_coeff, double cross_coeff):
    cdef double[::1] av = np.ascontiguousarray(z_a, dtype=float).ravel()
    cdef double[::1] bv = np.ascontiguousarray(z_b, dtype=float).ravel()
    cdef double[::1] rv = np.ascontiguousarray(rho, dtype=float).ravel()
    cdef Py_ssize_t n = av.shape[0], i
    out = np.empty(n)
    cdef double[::1] ov = out
    cdef double t1, t2, t3
    with nogil:
        for i in range(n):
            _pair_terms(av[i], bv[i], rv[i], free_coeff, cross_coeff, &t1, &t2, &t3)
            ov[i] = t1 + t2 + t3
    return out
