# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels: erfcx, the Faddeeva function, and the
monotone profile ``phi`` with its bisection solver.

Twin of ``slowmode._kernels_py``: same algorithms, same region switches,
same tolerances.  Keep the two in sync; ``slowmode._backend`` selects
whichever is available at import time.
"""

from libc.math cimport cos, erfc, exp, fabs, sin, sqrt, tgamma

__all__ = ["erfcx", "faddeeva", "phi", "solve_phi", "BACKEND_KIND"]

BACKEND_KIND = "compiled"

cdef double _PI = 3.14159265358979323846264338327950288
cdef double _SQRT_PI = sqrt(_PI)
cdef double _ISQRT_PI = 1.0 / _SQRT_PI
cdef double _SQRT_HALF_PI = sqrt(0.5 * _PI)
cdef double _SQRT_HALF = sqrt(0.5)

# 1 / Gamma(n/2 + 1) for the Maclaurin sum.
cdef double[129] _INV_GAMMA
cdef int _n
for _n in range(129):
    _INV_GAMMA[_n] = 1.0 / tgamma(0.5 * _n + 1.0)


cdef double _erfcx_c(double y) noexcept:
    cdef double inv2y2, term, acc
    cdef int n
    if y <= 25.0:
        return exp(y * y) * erfc(y)
    inv2y2 = 1.0 / (2.0 * y * y)
    term = 1.0
    acc = 1.0
    for n in range(1, 26):
        term *= -(2 * n - 1) * inv2y2
        acc += term
        if fabs(term) < 1e-17 * acc:
            break
    return acc * _ISQRT_PI / y


cdef double complex _w_series_c(double x, double y) noexcept:
    cdef double complex iz = -y + 1j * x
    cdef double complex term = 1.0
    cdef double complex acc = _INV_GAMMA[0]
    cdef double complex contrib
    cdef int n, small = 0
    for n in range(1, 129):
        term = term * iz
        contrib = term * _INV_GAMMA[n]
        acc = acc + contrib
        if fabs(contrib.real) + fabs(contrib.imag) < 1e-17 * (
            fabs(acc.real) + fabs(acc.imag)
        ):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    return acc


cdef double complex _w_contfrac_c(double x, double y) noexcept:
    cdef double complex z = x + 1j * y
    cdef double complex f = 1e-300
    cdef double complex c = f
    cdef double complex d = 0.0
    cdef double complex delta
    cdef double a
    cdef int j
    for j in range(1, 81):
        a = 1.0 if j == 1 else -0.5 * (j - 1)
        d = z + a * d
        if d == 0:
            d = 1e-300
        c = z + a / c
        if c == 0:
            c = 1e-300
        d = 1.0 / d
        delta = c * d
        f = f * delta
        if fabs(delta.real - 1.0) + fabs(delta.imag) < 1e-15:
            break
    return 1j * _ISQRT_PI * f


cdef double _dawson_c(double x) noexcept:
    cdef double h = 0.25
    cdef int n0 = 2 * <int>(0.5 * x / h + 0.5)
    cdef double xp = x - n0 * h
    cdef double acc = 0.0
    cdef double up, um
    cdef int k
    for k in range(1, 41, 2):
        up = xp - k * h
        if up * up < 45.0:
            acc += exp(-up * up) / (n0 + k)
        um = xp + k * h
        if um * um < 45.0:
            acc += exp(-um * um) / (n0 - k)
    return acc * _ISQRT_PI


cdef double complex _w_taylor_c(double x, double y) noexcept:
    cdef double complex t_prev = exp(-x * x) + 1j * (2.0 * _dawson_c(x) * _ISQRT_PI)
    cdef double complex t_cur = -2.0 * x * t_prev + 1j * (2.0 * _ISQRT_PI)
    cdef double complex iy = 1j * y
    cdef double complex acc = t_prev + t_cur * iy
    cdef double complex power = iy
    cdef double complex t_next, contrib
    cdef int m
    for m in range(1, 65):
        t_next = -(2.0 * x * t_cur + 2.0 * t_prev) / (m + 1.0)
        power = power * iy
        contrib = t_next * power
        acc = acc + contrib
        if fabs(contrib.real) + fabs(contrib.imag) < 1e-17 * (
            fabs(acc.real) + fabs(acc.imag)
        ):
            break
        t_prev = t_cur
        t_cur = t_next
    return acc


cdef double complex _w_upper_right_c(double x, double y) noexcept:
    cdef double r2 = x * x + y * y
    if r2 <= 7.29:
        return _w_series_c(x, y)
    if r2 >= 64.0 or y >= 1.0:
        return _w_contfrac_c(x, y)
    return _w_taylor_c(x, y)


cdef double complex _faddeeva_c(double x, double y) noexcept:
    cdef double complex w
    cdef double re, im, m
    if y < 0.0:
        # w(z) = 2 exp(-z^2) - w(-z)
        re = y * y - x * x
        im = -2.0 * x * y
        w = _faddeeva_c(-x, -y)
        m = exp(re)
        return (2.0 * m * cos(im) - w.real) + 1j * (2.0 * m * sin(im) - w.imag)
    if x < 0.0:
        w = _w_upper_right_c(-x, y)
        return w.real - 1j * w.imag
    return _w_upper_right_c(x, y)


cdef double _phi_c(double y) noexcept:
    return _SQRT_HALF_PI * _erfcx_c(y * _SQRT_HALF)


def erfcx(double y):
    """Scaled complementary error function exp(y^2) erfc(y) for y >= 0."""
    return _erfcx_c(y)


def faddeeva(double complex z):
    """Faddeeva function w(z) = exp(-z^2) erfc(-iz) for complex z."""
    return _faddeeva_c(z.real, z.imag)


def phi(double y):
    """Decay-rate profile phi(y) = sqrt(pi/2) erfcx(y / sqrt(2)), y >= 0."""
    return _phi_c(y)


def solve_phi(double c):
    """Solve phi(y) = c for the unique root y > 0, 0 < c < sqrt(pi/2).

    Bisection to bracket width 1e-14 (or midpoint collapse), then a few
    Newton polish steps using phi'(y) = y phi(y) - 1, clamped to the
    certified bracket.  Returns ``(y, bracket_width, iterations)``.
    """
    cdef double a = 0.0
    cdef double b = 2.0 / c
    cdef double m, y, f, d, step
    cdef int it = 0
    cdef int i
    if b < 1.0:
        b = 1.0
    while _phi_c(b) > c:
        b *= 2.0
    while it < 200:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        if _phi_c(m) > c:
            a = m
        else:
            b = m
        it += 1
        if b - a <= 1e-14:
            break
    y = 0.5 * (a + b)
    for i in range(4):
        f = _phi_c(y) - c
        d = y * _phi_c(y) - 1.0
        if d == 0.0:
            break
        step = f / d
        y -= step
        if fabs(step) <= 1e-16 * (1.0 + fabs(y)):
            break
    if not (a <= y <= b):
        y = 0.5 * (a + b)
    return y, b - a, it
