# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled witness-search kernels.

Mirrors ``_kernels_py`` operation for operation; results are bit-identical.
Build with floating-point contraction disabled so no FMA is introduced.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, INFINITY

cnp.import_array()

NAME = "cython"

cdef double SPLIT = 134217729.0
cdef double DX[8]
cdef double DY[8]
DX[:] = [1.0, -1.0, 0.0, 0.0, 1.0, 1.0, -1.0, -1.0]
DY[:] = [0.0, 0.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0]


cdef inline double prod_err(double a, double b, double p) noexcept nogil:
    cdef double t, ah, al, bh, bl
    t = SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    return (((ah * bh - p) + ah * bl) + al * bh) + al * bl


cdef inline double floor(double v) noexcept nogil:
    # exact floor via integer truncation; doubles beyond 2**52 are integers
    cdef double r
    if not (fabs(v) < 4503599627370496.0):
        return v
    r = <double>(<long long>v)
    if r > v:
        r -= 1.0
    return r


cdef inline double frac_dist(double s, double lo) noexcept nogil:
    cdef double r = floor(s + 0.5)
    cdef double t = (s - r) + lo
    return fabs(t - floor(t + 0.5))


cdef inline double dist(double x, double y, double ch, double cl,
                        double sh, double sl) noexcept nogil:
    cdef double p1, e1, p2, e2, s, bb, e3, lo
    p1 = x * ch
    e1 = prod_err(x, ch, p1)
    p2 = y * sh
    e2 = prod_err(y, sh, p2)
    s = p1 + p2
    bb = s - p1
    e3 = (p1 - (s - bb)) + (p2 - bb)
    lo = ((e1 + e2) + e3) + ((x * cl) + (y * sl))
    return frac_dist(s, lo)


cdef inline double c_margin(double x, double y, const double[:, ::1] tab) noexcept nogil:
    cdef Py_ssize_t k
    cdef double m = 0.5, d
    for k in range(tab.shape[0]):
        d = dist(x, y, tab[k, 0], tab[k, 1], tab[k, 2], tab[k, 3])
        if d < m:
            m = d
    return m


def margin(double x, double y, tab):
    cdef const double[:, ::1] t = np.ascontiguousarray(tab, dtype=np.float64)
    return c_margin(x, y, t)


def margin_batch(xs, ys, tab):
    cdef const double[:, ::1] t = np.ascontiguousarray(tab, dtype=np.float64)
    cdef const double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            o[i] = c_margin(xv[i], yv[i], t)
    return out


def pattern_search(double x, double y, tab, double step, double shrink,
                   long max_iter, double min_step):
    cdef const double[:, ::1] t = np.ascontiguousarray(tab, dtype=np.float64)
    cdef double f, nx, ny, nf
    cdef long it, evals = 1
    cdef int d, improved
    with nogil:
        f = c_margin(x, y, t)
        for it in range(max_iter):
            improved = 0
            for d in range(8):
                nx = x + DX[d] * step
                ny = y + DY[d] * step
                nf = c_margin(nx, ny, t)
                evals += 1
                if nf > f:
                    x = nx
                    y = ny
                    f = nf
                    improved = 1
            if not improved:
                step *= shrink
                if step < min_step:
                    break
    return x, y, f, evals


def axis_scan(atab, double c0, double tau, long long j0, long long j1, int keep):
    """Best ``keep`` points x = (tau + j) / c0 of the axis margin; ties by j."""
    cdef const double[:, ::1] t = np.ascontiguousarray(atab, dtype=np.float64)
    cdef Py_ssize_t k, nk = t.shape[0]
    # per-coefficient hi, lo and Veltkamp halves of hi
    coef = np.empty((nk, 4), dtype=np.float64)
    cdef double[:, ::1] cf = coef
    cdef double tt
    for k in range(nk):
        cf[k, 0] = t[k, 0]
        cf[k, 1] = t[k, 1]
        tt = SPLIT * t[k, 0]
        cf[k, 2] = tt - (tt - t[k, 0])
        cf[k, 3] = t[k, 0] - cf[k, 2]
    bm = np.empty(keep, dtype=np.float64)
    bj = np.empty(keep, dtype=np.float64)
    cdef double[::1] best_m = bm
    cdef double[::1] best_j = bj
    cdef int count = 0, pos, q
    cdef long long j
    cdef double x, xh, xl, m, d, p1, e1, thr, jd
    with nogil:
        thr = -INFINITY
        for j in range(j0, j1):
            jd = <double>j
            x = (tau + jd) / c0
            tt = SPLIT * x
            xh = tt - (tt - x)
            xl = x - xh
            m = 0.5
            for k in range(nk):
                p1 = x * cf[k, 0]
                e1 = (((xh * cf[k, 2] - p1) + xh * cf[k, 3]) + xl * cf[k, 2]) + xl * cf[k, 3]
                d = frac_dist(p1, e1 + x * cf[k, 1])
                if d < m:
                    m = d
                    # insertion needs m > thr, so ties can stop here too
                    if m <= thr:
                        break
            if not (m > thr):
                continue
            # insert after every entry with margin >= m
            pos = count if count < keep else keep - 1
            while pos > 0 and best_m[pos - 1] < m:
                pos -= 1
            if count < keep:
                count += 1
            q = count - 1
            while q > pos:
                best_m[q] = best_m[q - 1]
                best_j[q] = best_j[q - 1]
                q -= 1
            best_m[pos] = m
            best_j[pos] = jd
            if count == keep:
                thr = best_m[keep - 1]
    bm = bm[:count]
    bj = bj[:count]
    return bm, (tau + bj) / c0
