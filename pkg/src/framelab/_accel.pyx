# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled numeric kernels.

Same contracts as ``framelab._kernels_py`` (log domain, -inf for exact
zeros, power 0 keeps atoms with spectral value 0). Selected automatically
by ``framelab._backend`` when this extension is importable.
"""

from libc.math cimport INFINITY, cos, exp, hypot, log, sin

import numpy as np

cdef double complex J = 1j


cdef inline double _term(double log_term, double log_mod, double p) nogil:
    if log_mod == -INFINITY:
        return log_term if p == 0.0 else -INFINITY
    return log_term + 2.0 * p * log_mod


def logsumexp(double[::1] values):
    cdef Py_ssize_t i, n = values.shape[0]
    cdef double m = -INFINITY
    cdef double s = 0.0
    for i in range(n):
        if values[i] > m:
            m = values[i]
    if m == -INFINITY or m == INFINITY:
        return float(m)
    for i in range(n):
        s += exp(values[i] - m)
    return float(m + log(s))


def power_log_norms_sq(double[::1] log_terms, double[::1] log_mods,
                       double[::1] powers):
    cdef Py_ssize_t a, i
    cdef Py_ssize_t n_atoms = log_terms.shape[0]
    cdef Py_ssize_t n_pow = powers.shape[0]
    out_arr = np.empty(n_pow, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double p, t, m, s
    for i in range(n_pow):
        p = powers[i]
        m = -INFINITY
        for a in range(n_atoms):
            t = _term(log_terms[a], log_mods[a], p)
            if t > m:
                m = t
        if m == -INFINITY or m == INFINITY:
            out[i] = m
            continue
        s = 0.0
        for a in range(n_atoms):
            t = _term(log_terms[a], log_mods[a], p)
            if t != -INFINITY:
                s += exp(t - m)
        out[i] = m + log(s)
    return out_arr


def carleson_log_sums(double complex[::1] points):
    cdef Py_ssize_t j, k, n = points.shape[0]
    sums_arr = np.zeros(n, dtype=np.float64)
    coin_arr = np.zeros(n, dtype=np.uint8)
    cdef double[::1] sums = sums_arr
    cdef unsigned char[::1] coin = coin_arr
    cdef double aj, bj, ak, bk, dre, dim, nre, nim, s
    cdef bint dup
    for j in range(n):
        aj = points[j].real
        bj = points[j].imag
        s = 0.0
        dup = False
        for k in range(n):
            if k == j:
                continue
            ak = points[k].real
            bk = points[k].imag
            dre = aj - ak
            dim = bj - bk
            if dre == 0.0 and dim == 0.0:
                dup = True
                break
            # 1 - conj(p_j) p_k = 1 - (aj*ak + bj*bk) - i(aj*bk - bj*ak)
            nre = 1.0 - (aj * ak + bj * bk)
            nim = -(aj * bk - bj * ak)
            s += log(hypot(dre, dim)) - log(hypot(nre, nim))
        if dup:
            coin[j] = 1
            sums[j] = -INFINITY
        else:
            sums[j] = s
    return sums_arr, coin_arr


def scaled_power_matrix(double complex[::1] coords, long[::1] atom_of_coord,
                        double[::1] log_mods, double[::1] angles,
                        double[::1] powers, double[::1] log_scales,
                        double complex[::1] scale_phases):
    cdef Py_ssize_t i, j
    cdef Py_ssize_t d = coords.shape[0]
    cdef Py_ssize_t m = powers.shape[0]
    out_arr = np.empty((d, m), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t a
    cdef double lm, ang, p, mag, theta
    for i in range(d):
        a = atom_of_coord[i]
        lm = log_mods[a]
        ang = angles[a]
        for j in range(m):
            p = powers[j]
            if lm == -INFINITY:
                if p != 0.0:
                    out[i, j] = 0.0
                    continue
                mag = exp(log_scales[j])
                theta = 0.0
            else:
                mag = exp(log_scales[j] + p * lm)
                theta = p * ang
            out[i, j] = coords[i] * scale_phases[j] * mag * (cos(theta) + J * sin(theta))
    return out_arr
