"""Pure numpy implementations of the hot kernels.

``_kernels.pyx`` mirrors these loops one for one; keep the two in step.
"""
import numpy as np


def _m_terms(p, x, y):
    p2 = p * p
    p3 = p2 * p
    p4 = p2 * p2
    q = 4.0 - p2
    x2 = x * x
    x3 = x2 * x
    w = 1.0 - x2
    m1 = (25.0 * p4 * p2 + 135.0 * x3 * p2 * q * q + 18.0 * x2 * x2 * p2 * q * q
          + 324.0 * x3 * q * q + 72.0 * x * p4 * q + 648.0 * x2 * p2 * q
          + 42.0 * x2 * p4 * q + 162.0 * x3 * p4 * q)
    m2 = 24.0 * w * q * (10.0 * p3 + 27.0 * p3 * x + q * (18.0 * p * x + 3.0 * p * x2))
    m3 = 72.0 * w * q * ((8.0 + x2) * q + 9.0 * p2 * x)
    m4 = 648.0 * w * q * (p2 + x * q)
    return (m1 + m2 * y + m3 * y * y + m4 * (1.0 - y * y)) / 82944.0


def eval_m(p, x, y):
    """H3,1 majorant at a single point of the cuboid (no domain check)."""
    return float(_m_terms(float(p), float(x), float(y)))


def eval_m_points(p, x, y):
    """Vectorised majorant; inputs broadcast against each other."""
    p, x, y = np.broadcast_arrays(np.asarray(p, float), np.asarray(x, float), np.asarray(y, float))
    return _m_terms(p, x, y)


def coeffs_batch(P):
    """a2..a7 for each row of an (m, 6) array of p1..p6."""
    P = np.asarray(P, dtype=np.complex128)
    p1, p2, p3, p4, p5, p6 = (P[:, k] for k in range(6))
    q1 = p1 * p1
    out = np.empty((P.shape[0], 6), dtype=np.complex128)
    out[:, 0] = 0.5 * p1
    out[:, 1] = 0.25 * p2
    out[:, 2] = (-q1 * p1 - 6.0 * p1 * p2 + 24.0 * p3) / 144.0
    out[:, 3] = (5.0 * q1 * q1 - 6.0 * q1 * p2 - 36.0 * p2 * p2 - 48.0 * p1 * p3 + 144.0 * p4) / 1152.0
    out[:, 4] = (-54.0 * q1 * q1 * p1 + 355.0 * q1 * p1 * p2 + 150.0 * p1 * p2 * p2
                 - 1680.0 * p2 * p3 - 1080.0 * p1 * p4 + 2880.0 * p5) / 28800.0
    out[:, 5] = (1031.0 * q1 * q1 * q1 - 17220.0 * q1 * q1 * p2 + 26100.0 * q1 * p2 * p2
                 + 9000.0 * p2 * p2 * p2 + 19200.0 * q1 * p1 * p3 + 33120.0 * p1 * p2 * p3
                 - 57600.0 * p3 * p3 + 4320.0 * q1 * p4 - 108000.0 * p2 * p4
                 - 69120.0 * p1 * p5 + 172800.0 * p6) / 2073600.0
    return out
