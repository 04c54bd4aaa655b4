# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for polynomial boundary evaluation.

Same contract as kernels/_ref.polyeval_boundary; the tight C loops avoid
the (m, n) broadcast temporaries of the numpy path, which dominates the
runtime of the extremal search.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport atan2, hypot, log, exp, cos, sin, INFINITY

cnp.import_array()


cdef double _logdp_near(double zr, double zi,
                        const double complex[::1] roots,
                        double lead_abs_log, Py_ssize_t n) noexcept:
    """log|p'(z)| via leave-one-out products with log-sum-exp scaling."""
    cdef Py_ssize_t j, k, nzero = 0, jzero = -1
    cdef double dr, di, ad
    cdef double total = 0.0
    cdef double m, lj, pj, accr, acci, w

    for k in range(n):
        dr = zr - roots[k].real
        di = zi - roots[k].imag
        ad = hypot(dr, di)
        if ad == 0.0:
            nzero += 1
            jzero = k
    if nzero >= 2:
        return -INFINITY
    if nzero == 1:
        total = lead_abs_log
        for k in range(n):
            if k == jzero:
                continue
            dr = zr - roots[k].real
            di = zi - roots[k].imag
            total += log(hypot(dr, di))
        return total

    # log magnitudes / phases of each leave-one-out product
    m = -INFINITY
    for j in range(n):
        lj = 0.0
        for k in range(n):
            if k == j:
                continue
            dr = zr - roots[k].real
            di = zi - roots[k].imag
            lj += log(hypot(dr, di))
        if lj > m:
            m = lj
    accr = 0.0
    acci = 0.0
    for j in range(n):
        lj = 0.0
        pj = 0.0
        for k in range(n):
            if k == j:
                continue
            dr = zr - roots[k].real
            di = zi - roots[k].imag
            lj += log(hypot(dr, di))
            pj += atan2(di, dr)
        w = exp(lj - m)
        accr += w * cos(pj)
        acci += w * sin(pj)
    w = hypot(accr, acci)
    if w == 0.0:
        return -INFINITY
    return lead_abs_log + m + log(w)


def polyeval_boundary(z, roots, lead, double eps_root):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] za = \
        np.ascontiguousarray(z, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] ra = \
        np.ascontiguousarray(roots, dtype=np.complex128)
    cdef Py_ssize_t m = za.shape[0]
    cdef Py_ssize_t n = ra.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] logp = np.empty(m, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] logdp = np.empty(m, dtype=np.float64)
    cdef const double complex[::1] rv = ra
    cdef double complex lc = lead
    cdef double lead_abs_log = log(hypot(lc.real, lc.imag))
    cdef Py_ssize_t i, k
    cdef double zr, zi, dr, di, ad, mind, lp, sr, si, smag

    for i in range(m):
        zr = za[i].real
        zi = za[i].imag
        lp = lead_abs_log
        mind = INFINITY
        sr = 0.0
        si = 0.0
        for k in range(n):
            dr = zr - rv[k].real
            di = zi - rv[k].imag
            ad = dr * dr + di * di
            if ad == 0.0:
                lp = -INFINITY
                mind = 0.0
                continue
            lp += 0.5 * log(ad)
            if ad < mind:
                mind = ad
            sr += dr / ad
            si += -di / ad
        logp[i] = lp
        if mind > eps_root * eps_root:
            smag = hypot(sr, si)
            if smag == 0.0:
                logdp[i] = -INFINITY
            else:
                logdp[i] = lp + log(smag)
        else:
            logdp[i] = _logdp_near(zr, zi, rv, lead_abs_log, n)
    return logp, logdp
