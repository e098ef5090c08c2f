# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: batched Aberth-Ehrlich iteration and modular elimination."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, pow, fabs, M_PI
from libc.stdint cimport int64_t

cnp.import_array()

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef inline double _absc(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef double _root_radius(const double complex[::1] c, int d) nogil:
    # Fujiwara-style bound on root moduli, for initial points
    cdef double lead = _absc(c[d])
    cdef double r = 0.0, v
    cdef int k
    for k in range(d):
        v = pow(_absc(c[k]) / lead, 1.0 / (d - k))
        if v > r:
            r = v
    if r == 0.0:
        r = 1.0
    return r


def aberth_batch(double complex[:, ::1] coeffs, int maxiter=500, double tol=1e-14):
    """Roots of many polynomials of one degree (coefficients lowest power first).

    Returns ``(roots, converged)`` with shapes ``(npoly, d)`` and ``(npoly,)``.
    """
    cdef Py_ssize_t npoly = coeffs.shape[0]
    cdef int d = <int>coeffs.shape[1] - 1
    roots_arr = np.zeros((npoly, max(d, 0)), dtype=np.complex128)
    conv_arr = np.zeros(npoly, dtype=np.uint8)
    if d < 1:
        conv_arr[:] = 1
        return roots_arr, conv_arr
    cdef double complex[:, ::1] z = roots_arr
    cdef unsigned char[::1] conv = conv_arr
    cdef Py_ssize_t s
    cdef int i, j, k, it, done
    cdef double complex p, dp, w, acc, diff
    cdef double r, ang
    with nogil:
        for s in range(npoly):
            if _absc(coeffs[s, d]) == 0.0:
                continue
            r = _root_radius(coeffs[s], d)
            for i in range(d):
                ang = 2.0 * M_PI * i / d + 0.4
                z[s, i] = r * (cos(ang) + 1j * sin(ang))
            for it in range(maxiter):
                done = 1
                for i in range(d):
                    p = coeffs[s, d]
                    dp = 0
                    for k in range(d - 1, -1, -1):
                        dp = dp * z[s, i] + p
                        p = p * z[s, i] + coeffs[s, k]
                    if p == 0:
                        continue
                    w = p / dp if dp != 0 else 1e-3 * (1 + _absc(z[s, i]))
                    acc = 0
                    for j in range(d):
                        if j != i:
                            diff = z[s, i] - z[s, j]
                            if diff != 0:
                                acc = acc + 1.0 / diff
                    w = w / (1.0 - w * acc)
                    z[s, i] = z[s, i] - w
                    if _absc(w) > tol * (1.0 + _absc(z[s, i])):
                        done = 0
                if done:
                    conv[s] = 1
                    break
    return roots_arr, conv_arr


cdef inline int64_t _mulmod(int64_t a, int64_t b, int64_t p) nogil:
    return <int64_t>((<int128>a * b) % p)


cdef int64_t _powmod(int64_t a, int64_t e, int64_t p) nogil:
    cdef int64_t r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = _mulmod(r, a, p)
        a = _mulmod(a, a, p)
        e >>= 1
    return r


def rank_mod_p(int64_t[:, ::1] mat, int64_t p):
    """Rank of an integer matrix modulo a prime ``p < 2**62`` (input is copied)."""
    cdef Py_ssize_t nr = mat.shape[0], nc = mat.shape[1]
    work = np.empty((nr, nc), dtype=np.int64)
    cdef int64_t[:, ::1] a = work
    cdef Py_ssize_t i, j, col, piv, rank = 0
    cdef int64_t inv, c, t
    with nogil:
        for i in range(nr):
            for j in range(nc):
                t = mat[i, j] % p
                a[i, j] = t + p if t < 0 else t
        for col in range(nc):
            if rank == nr:
                break
            piv = -1
            for i in range(rank, nr):
                if a[i, col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(nc):
                    t = a[piv, j]
                    a[piv, j] = a[rank, j]
                    a[rank, j] = t
            inv = _powmod(a[rank, col], p - 2, p)
            for i in range(rank + 1, nr):
                if a[i, col] != 0:
                    c = _mulmod(a[i, col], inv, p)
                    for j in range(col, nc):
                        if a[rank, j] != 0:
                            t = a[i, j] - _mulmod(c, a[rank, j], p)
                            a[i, j] = t + p if t < 0 else t
            rank += 1
    return rank


def det_mod_p(int64_t[:, ::1] mat, int64_t p):
    """Determinant of a square integer matrix modulo a prime ``p < 2**62``."""
    cdef Py_ssize_t n = mat.shape[0]
    if mat.shape[1] != n:
        raise ValueError("matrix is not square")
    work = np.empty((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] a = work
    cdef Py_ssize_t i, j, k, piv
    cdef int64_t det = 1, inv, c, t
    with nogil:
        for i in range(n):
            for j in range(n):
                t = mat[i, j] % p
                a[i, j] = t + p if t < 0 else t
        for k in range(n):
            piv = -1
            for i in range(k, n):
                if a[i, k] != 0:
                    piv = i
                    break
            if piv < 0:
                det = 0
                break
            if piv != k:
                for j in range(n):
                    t = a[piv, j]
                    a[piv, j] = a[k, j]
                    a[k, j] = t
                det = p - det if det != 0 else 0
            det = _mulmod(det, a[k, k], p)
            inv = _powmod(a[k, k], p - 2, p)
            for i in range(k + 1, n):
                if a[i, k] != 0:
                    c = _mulmod(a[i, k], inv, p)
                    for j in range(k, n):
                        if a[k, j] != 0:
                            t = a[i, j] - _mulmod(c, a[k, j], p)
                            a[i, j] = t + p if t < 0 else t
    return det
