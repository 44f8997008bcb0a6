# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline double _m(double p, double x, double y) nogil:
    cdef double p2 = p * p
    cdef double p3 = p2 * p
    cdef double p4 = p2 * p2
    cdef double q = 4.0 - p2
    cdef double x2 = x * x
    cdef double x3 = x2 * x
    cdef double w = 1.0 - x2
    cdef double m1 = (25.0 * p4 * p2 + 135.0 * x3 * p2 * q * q + 18.0 * x2 * x2 * p2 * q * q
                      + 324.0 * x3 * q * q + 72.0 * x * p4 * q + 648.0 * x2 * p2 * q
                      + 42.0 * x2 * p4 * q + 162.0 * x3 * p4 * q)
    cdef double m2 = 24.0 * w * q * (10.0 * p3 + 27.0 * p3 * x + q * (18.0 * p * x + 3.0 * p * x2))
    cdef double m3 = 72.0 * w * q * ((8.0 + x2) * q + 9.0 * p2 * x)
    cdef double m4 = 648.0 * w * q * (p2 + x * q)
    return (m1 + m2 * y + m3 * y * y + m4 * (1.0 - y * y)) / 82944.0


def eval_m(double p, double x, double y):
    return _m(p, x, y)


def eval_m_points(p, x, y):
    p, x, y = np.broadcast_arrays(np.asarray(p, float), np.asarray(x, float), np.asarray(y, float))
    shape = p.shape
    cdef const double[::1] pv = np.ascontiguousarray(p, dtype=np.float64).ravel()
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef const double[::1] yv = np.ascontiguousarray(y, dtype=np.float64).ravel()
    cdef Py_ssize_t n = pv.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            ov[i] = _m(pv[i], xv[i], yv[i])
    return out.reshape(shape)


def coeffs_batch(P):
    cdef const double complex[:, ::1] pv = np.ascontiguousarray(P, dtype=np.complex128)
    cdef Py_ssize_t m = pv.shape[0]
    out = np.empty((m, 6), dtype=np.complex128)
    cdef double complex[:, ::1] ov = out
    cdef double complex p1, p2, p3, p4, p5, p6, q1
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            p1 = pv[i, 0]; p2 = pv[i, 1]; p3 = pv[i, 2]
            p4 = pv[i, 3]; p5 = pv[i, 4]; p6 = pv[i, 5]
            q1 = p1 * p1
            ov[i, 0] = 0.5 * p1
            ov[i, 1] = 0.25 * p2
            ov[i, 2] = (-q1 * p1 - 6.0 * p1 * p2 + 24.0 * p3) / 144.0
            ov[i, 3] = (5.0 * q1 * q1 - 6.0 * q1 * p2 - 36.0 * p2 * p2 - 48.0 * p1 * p3 + 144.0 * p4) / 1152.0
            ov[i, 4] = (-54.0 * q1 * q1 * p1 + 355.0 * q1 * p1 * p2 + 150.0 * p1 * p2 * p2
                        - 1680.0 * p2 * p3 - 1080.0 * p1 * p4 + 2880.0 * p5) / 28800.0
            ov[i, 5] = (1031.0 * q1 * q1 * q1 - 17220.0 * q1 * q1 * p2 + 26100.0 * q1 * p2 * p2
                        + 9000.0 * p2 * p2 * p2 + 19200.0 * q1 * p1 * p3 + 33120.0 * p1 * p2 * p3
                        - 57600.0 * p3 * p3 + 4320.0 * q1 * p4 - 108000.0 * p2 * p4
                        - 69120.0 * p1 * p5 + 172800.0 * p6) / 2073600.0
    return out
