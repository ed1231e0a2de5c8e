"""Pure-Python numerical kernels.

Reference implementation of the hot loops, used when the compiled extension
``_ckernels`` is unavailable or when ``CASIMIR_POLDER_BACKEND=python``.  The
algorithms mirror ``_ckernels.pyx`` line by line; keep the two in sync.

No argument validation happens here; callers guarantee ``z > 0`` etc.
"""
import math

import numpy as np

EULER_GAMMA = 0.57721566490153286061
HALF_PI = 0.5 * math.pi

# Branch points for the auxiliary functions.
SERIES_MAX_Z = 4.0
ASYMPTOTIC_MIN_Z = 40.0
# Above this the wall-force bracket is summed from its own asymptotic series,
# avoiding the O(z**2) cancellation of the defining combination.
BRACKET_ASYMPTOTIC_MIN_Z = 80.0

_EPS = 1e-17
_CF_EPS = 3e-16
_CF_MAXITER = 1000


def _si_ci_series(z):
    z2 = z * z
    # Si: sum (-1)^n z^(2n+1) / ((2n+1) (2n+1)!)
    t = z
    si = z
    n = 0
    while True:
        n += 1
        t *= -z2 / ((2 * n) * (2 * n + 1))
        term = t / (2 * n + 1)
        si += term
        if abs(term) < _EPS * abs(si):
            break
    # Ci: gamma + ln z + sum_{n>=1} (-1)^n z^(2n) / (2n (2n)!)
    t = 1.0
    s = 0.0
    n = 0
    while True:
        n += 1
        t *= -z2 / ((2 * n - 1) * (2 * n))
        term = t / (2 * n)
        s += term
        if abs(term) <= _EPS * max(abs(s), 1e-300):
            break
    ci = EULER_GAMMA + math.log(z) + s
    return si, ci


def _fg_continued_fraction(z):
    # Modified Lentz evaluation of h = e^{iz} E1(iz); f = -Im h, g = Re h.
    b_re, b_im = 1.0, z
    c_re, c_im = 1e300, 0.0
    den = b_re * b_re + b_im * b_im
    d_re, d_im = b_re / den, -b_im / den
    h_re, h_im = d_re, d_im
    for i in range(1, _CF_MAXITER):
        a = -float(i * i)
        b_re += 2.0
        # d = 1 / (a d + b)
        x_re = a * d_re + b_re
        x_im = a * d_im + b_im
        den = x_re * x_re + x_im * x_im
        d_re, d_im = x_re / den, -x_im / den
        # c = b + a / c
        den = c_re * c_re + c_im * c_im
        c_re = b_re + a * c_re / den
        c_im = b_im - a * c_im / den
        del_re = c_re * d_re - c_im * d_im
        del_im = c_re * d_im + c_im * d_re
        h_re, h_im = h_re * del_re - h_im * del_im, h_re * del_im + h_im * del_re
        if abs(del_re - 1.0) + abs(del_im) < _CF_EPS:
            break
    return -h_im, h_re


def _fg_asymptotic(z):
    iz2 = 1.0 / (z * z)
    # f ~ (1/z) sum (-1)^n (2n)! / z^(2n)
    tf = 1.0
    sf = 1.0
    n = 0
    while True:
        n += 1
        nxt = -tf * (2 * n) * (2 * n - 1) * iz2
        if abs(nxt) >= abs(tf) or abs(nxt) < _EPS:
            if abs(nxt) < abs(tf):
                sf += nxt
            break
        tf = nxt
        sf += tf
    # g ~ (1/z^2) sum (-1)^n (2n+1)! / z^(2n)
    tg = 1.0
    sg = 1.0
    n = 0
    while True:
        n += 1
        nxt = -tg * (2 * n + 1) * (2 * n) * iz2
        if abs(nxt) >= abs(tg) or abs(nxt) < _EPS:
            if abs(nxt) < abs(tg):
                sg += nxt
            break
        tg = nxt
        sg += tg
    return sf / z, sg * iz2


def aux_fg(z):
    """Return ``(f(z), g(z))`` for ``z > 0``."""
    if z <= SERIES_MAX_Z:
        si, ci = _si_ci_series(z)
        s, c = math.sin(z), math.cos(z)
        rest = HALF_PI - si
        return ci * s + rest * c, -ci * c + rest * s
    if z < ASYMPTOTIC_MIN_Z:
        return _fg_continued_fraction(z)
    if math.isinf(z):
        return 0.0, 0.0
    return _fg_asymptotic(z)


def si_ci(z):
    """Return ``(Si(z), Ci(z))`` for ``z > 0``."""
    if z <= SERIES_MAX_Z:
        return _si_ci_series(z)
    if math.isinf(z):
        return HALF_PI, 0.0
    f, g = aux_fg(z)
    s, c = math.sin(z), math.cos(z)
    return HALF_PI - f * c - g * s, f * s - g * c


def _ground_bracket_asymptotic(z):
    # B ~ sum_m (-1)^m (2m)! p(m) / z^(2m+1),
    # p(m) = 3(2m+1)(2m+2) + 6 + (2m+1)(2m+2)(2m+3) + 6(2m+1)
    iz2 = 1.0 / (z * z)
    a = 1.0
    total = 24.0
    prev = 24.0
    m = 0
    while True:
        m += 1
        a *= -(2 * m) * (2 * m - 1) * iz2
        k = 2 * m + 1
        term = a * (3 * k * (k + 1) + 6 + k * (k + 1) * (k + 2) + 6 * k)
        if abs(term) >= abs(prev):
            break
        total += term
        if abs(term) < _EPS * abs(total):
            break
        prev = term
    return total / z


def wall_brackets(x):
    """Square brackets of the ground and excited atom-wall force at ``x = k0 d``.

    ``F_g = -mu^2/(12 pi d^4) * b_ground`` and
    ``F_e = +mu^2/(12 pi d^4) * b_excited``.
    """
    z = 2.0 * x
    p = 2.0 * x * x - 1.0
    q = x * (2.0 * x * x - 3.0)
    if z > BRACKET_ASYMPTOTIC_MIN_Z:
        b_ground = _ground_bracket_asymptotic(z)
    else:
        f, g = aux_fg(z)
        b_ground = 8.0 * x - 6.0 * p * f - 4.0 * q * g
    b_excited = b_ground + math.pi * (6.0 * p * math.cos(z) + 4.0 * q * math.sin(z))
    return b_ground, b_excited


def pair_terms(z_a, z_b, rho, free_coeff, cross_coeff):
    """Free, image and cross terms of the far-zone pair potential per unit alpha_A alpha_B."""
    rho2 = rho * rho
    dz = z_a - z_b
    sz = z_a + z_b
    R2 = rho2 + dz * dz
    Rb2 = rho2 + sz * sz
    R = math.sqrt(R2)
    Rb = math.sqrt(Rb2)
    s = rho2 / R2 if rho2 > 0.0 else 0.0
    sb = rho2 / Rb2 if rho2 > 0.0 else 0.0
    R3 = R2 * R
    Rb3 = Rb2 * Rb
    free = -free_coeff / (R3 * R3 * R)
    image = -free_coeff / (Rb3 * Rb3 * Rb)
    bracket = (R2 * R2 * s + 5.0 * R3 * Rb * s + R2 * Rb2 * (6.0 + s + sb)
               + 5.0 * R * Rb3 * sb + Rb2 * Rb2 * sb)
    RRb = R + Rb
    cross = cross_coeff * bracket / (R3 * Rb3 * (RRb * RRb * RRb * RRb * RRb))
    return free, image, cross


def aux_fg_array(z):
    z = np.ascontiguousarray(z, dtype=float).ravel()
    f = np.empty_like(z)
    g = np.empty_like(z)
    for i in range(z.shape[0]):
        f[i], g[i] = aux_fg(z[i])
    return f, g


def wall_brackets_array(x):
    x = np.ascontiguousarray(x, dtype=float).ravel()
    bg = np.empty_like(x)
    be = np.empty_like(x)
    for i in range(x.shape[0]):
        bg[i], be[i] = wall_brackets(x[i])
    return bg, be


def pair_total_array(z_a, z_b, rho, free_coeff, cross_coeff):
    z_a = np.ascontiguousarray(z_a, dtype=float).ravel()
    z_b = np.ascontiguousarray(z_b, dtype=float).ravel()
    rho = np.ascontiguousarray(rho, dtype=float).ravel()
    out = np.empty_like(z_a)
    for i in range(z_a.shape[0]):
        a, b, c = pair_terms(z_a[i], z_b[i], rho[i], free_coeff, cross_coeff)
        out[i] = a + b + c
    return out
