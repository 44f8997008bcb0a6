"""Objectives on the cuboid U = [0, 2] x [0, 1] x [0, 1].

``eval_M`` is the polynomial majorant of |H3,1| in the variables p = p1,
x = |gamma| and y = |eta|.  The face and edge restrictions that appear in the
hand analysis of that majorant are exposed by :func:`edge_functions`, both in
their printed form and as literal restrictions of ``eval_M``.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .. import _kernels_py, kernels
from ..errors import DomainViolation
from ..functionals import h23_batch

__all__ = [
    "BOX",
    "eval_M",
    "grad_M",
    "RegionFunction",
    "edge_functions",
    "interior_critical_feasible",
    "feasibility_window",
    "p234_from_params",
    "fourier_majorant",
    "h23_majorant",
]

BOX = ((0.0, 2.0), (0.0, 1.0), (0.0, 1.0))
_EDGE_TOL = 1e-12


def _check_domain(p, x, y):
    for v, (lo, hi), name in zip((p, x, y), BOX, "pxy"):
        v = np.asarray(v, dtype=float)
        if np.any(v < lo - _EDGE_TOL) or np.any(v > hi + _EDGE_TOL) or np.any(np.isnan(v)):
            raise DomainViolation(f"{name} outside [{lo}, {hi}]")


def eval_M(p, x, y):
    """Majorant M(p, x, y) of |H3,1|; scalar in, float out, arrays broadcast."""
    _check_domain(p, x, y)
    if np.ndim(p) == 0 and np.ndim(x) == 0 and np.ndim(y) == 0:
        return kernels.eval_m(float(p), float(x), float(y))
    return kernels.eval_m_points(p, x, y)


def grad_M(p: float, x: float, y: float) -> np.ndarray:
    """Exact gradient of M by complex-step differentiation (M is a polynomial)."""
    h = 1e-30
    f = _kernels_py._m_terms
    return np.array([
        f(p + 1j * h, x, y).imag / h,
        f(p, x + 1j * h, y).imag / h,
        f(p, x, y + 1j * h).imag / h,
    ])


# -- faces and edges ----------------------------------------------------------


class RegionFunction(NamedTuple):
    name: str
    kind: str  # "face" or "edge"
    fixed: dict
    free: tuple
    printed: Callable
    note: str = ""

    def restricted(self, *args):
        """``eval_M`` with the fixed coordinates pinned and ``args`` in ``free`` order."""
        args = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in args))
        coords = dict(zip(self.free, args))
        shape = args[0].shape
        return eval_M(*(coords[k] if k in coords else np.full(shape, self.fixed[k]) for k in "pxy"))

    @property
    def domain(self):
        return tuple(BOX["pxy".index(k)] for k in self.free)


_DROPPED_X3 = "printed form omits the x^3/16 term that M carries at p = 0"


def _n1(x, y):
    return (1 - x**2) * ((8 + x**2) * y**2 + 9 * x * (1 - y**2)) / 72


def _n2(p, y):
    return (25 * p**6 + (4 - p**2) * (240 * p**3 * y + 576 * (4 - p**2) * y**2
                                      + 648 * p**2 * (1 - y**2))) / 82944


def _n3(p):
    return (2592 + 1224 * p**2 - 222 * p**4 - 49 * p**6) / 41472


def _n4(p, x):
    return (p**6 * (25 - 42 * x**2 - 27 * x**3 + 18 * x**4)
            - 288 * (-36 * x + 18 * x**3 - x * p**4)
            - 12 * p**4 * (54 - 54 * x - 14 * x**2 + 63 * x**3 + 12 * x**4)
            + 72 * p**2 * (36 - 72 * x + 66 * x**3 + 4 * x**4 - x * p**4)) / 82944


def _n5(p, x):
    q = 4 - p**2
    return (25 * p**6 + q * (72 * p**4 * x + 648 * p**2 * x**2 + 42 * p**4 * x**2
                             + 162 * p**4 * x**3 + 18 * p**2 * q * x**4
                             + 72 * (1 - x**2) * (9 * p**2 * x + q * (8 + x**2))
                             + 135 * p**2 * q * x**3 + 324 * q * x**3
                             + 288 * p * x * (1 - x**2) * (6 + x)
                             + 24 * p**3 * (1 - x**2) * (10 + 9 * x - 3 * x**2))) / 82944


def edge_functions() -> dict[str, RegionFunction]:
    """Face functions n1..n5 and edge functions r1..r5 of the H3,1 analysis.

    ``printed`` is the formula as published.  Where it disagrees with the
    restriction of ``eval_M`` the entry carries a ``note``.
    """
    table = [
        RegionFunction("n1", "face", {"p": 0.0}, ("x", "y"), _n1, _DROPPED_X3),
        RegionFunction("n2", "face", {"x": 0.0}, ("p", "y"), _n2),
        RegionFunction("n3", "face", {"x": 1.0}, ("p", "y"), lambda p, y=0.0: _n3(p) + 0 * np.asarray(y)),
        RegionFunction("n4", "face", {"y": 0.0}, ("p", "x"), _n4),
        RegionFunction("n5", "face", {"y": 1.0}, ("p", "x"), _n5),
        RegionFunction("face_p2", "face", {"p": 2.0}, ("x", "y"),
                       lambda x, y: 25 / 1296 + 0 * np.asarray(x) * np.asarray(y)),
        RegionFunction("r1", "edge", {"x": 0.0, "y": 0.0}, ("p",),
                       lambda p: (25 * p**6 + 2592 * p**2 - 648 * p**4) / 82944),
        RegionFunction("r2", "edge", {"x": 0.0, "y": 1.0}, ("p",),
                       lambda p: (9216 - 4608 * p**2 + 3168 * p**4 - 623 * p**6) / 82944,
                       "printed form omits the odd powers 960 p^3 - 240 p^5 coming from m2 at x = 0"),
        RegionFunction("r3", "edge", {"x": 1.0, "y": 0.0}, ("p",), _n3),
        RegionFunction("r4", "edge", {"p": 0.0, "y": 1.0}, ("x",),
                       lambda x: (8 - 7 * x**2 - x**4) / 72, _DROPPED_X3),
        RegionFunction("r5", "edge", {"p": 0.0, "y": 0.0}, ("x",),
                       lambda x: x * (1 - x**2) / 8, _DROPPED_X3),
        RegionFunction("edge_p0_x0", "edge", {"p": 0.0, "x": 0.0}, ("y",), lambda y: y**2 / 9),
        RegionFunction("edge_p0_x1", "edge", {"p": 0.0, "x": 1.0}, ("y",),
                       lambda y: 1 / 16 + 0 * np.asarray(y)),
    ]
    return {r.name: r for r in table}


# -- interior critical-point feasibility --------------------------------------


def interior_critical_feasible(p, x):
    """Condition under which dM/dy = 0 has its root y0 inside (0, 1)."""
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    lhs = (p**3 * (10 + 9 * x - 3 * x**2) + 24 * (8 - 9 * x + x**2)
           - 6 * p**2 * x**2 + 12 * p * x * (6 + x))
    return lhs < 6 * p**2 * (17 - 18 * x)


def _bisect_switch(pred, lo, hi, iters=200):
    flo = bool(pred(lo))
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if bool(pred(mid)) == flo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def feasibility_window(eps: float = 1e-12) -> tuple[float, float]:
    """(p_min, x_max) of the feasible region, from its x -> 0 and p -> 2 edges."""
    p_min = _bisect_switch(lambda p: interior_critical_feasible(p, eps), 0.0, 2.0)
    x_max = _bisect_switch(lambda x: interior_critical_feasible(2.0 - eps, x), 0.0, 1.0)
    return p_min, x_max


# -- Fourier majorants (H2,3) -------------------------------------------------


def p234_from_params(p, g, e, r, ag=None, ae=None):
    """Vectorised p2, p3, p4; ``ag``/``ae`` override |gamma|^2 and |eta|^2."""
    q = 4.0 - p * p
    ag = np.abs(g) ** 2 if ag is None else ag
    ae = np.abs(e) ** 2 if ae is None else ae
    p2 = (p * p + g * q) / 2
    p3 = (p**3 + 2 * p * q * g - p * q * g * g + 2 * q * (1 - ag) * e) / 4
    p4 = (p**4 + q * g * (p * p * (g * g - 3 * g + 3) + 4 * g)
          - 4 * q * (1 - ag) * (p * (g - 1) * e + np.conj(g) * e * e - (1 - ae) * r)) / 8
    return p2, p3, p4


def fourier_majorant(batch, p, x, y, sizes=(8, 4, 2), chunk: int = 8192):
    """Triangle-inequality majorant of |F| over the phases of gamma, eta, rho.

    For fixed (p, |gamma|, |eta|) with |rho| = 1, F is a trigonometric
    polynomial in the three phases; the sum of the moduli of its Fourier
    coefficients bounds |F| for every phase and every |rho| <= 1.  ``sizes``
    must exceed the frequency spread in each phase (8, 4, 2 suffices for
    functionals up to a5).
    """
    p, x, y = np.broadcast_arrays(np.asarray(p, float), np.asarray(x, float), np.asarray(y, float))
    shape = p.shape
    pf, xf, yf = p.ravel(), x.ravel(), y.ravel()
    ng, ne, nr = sizes
    ph = [np.exp(2j * np.pi * np.arange(n) / n) for n in sizes]
    G, E, R = np.meshgrid(*ph, indexing="ij")
    out = np.empty(pf.shape)
    for s in range(0, len(pf), chunk):
        pp = pf[s:s + chunk, None, None, None]
        xx = xf[s:s + chunk, None, None, None]
        yy = yf[s:s + chunk, None, None, None]
        g = xx * G
        e = yy * E
        p2, p3, p4 = p234_from_params(pp, g, e, R, ag=xx * xx, ae=yy * yy)
        P = np.zeros(p2.shape + (6,), dtype=np.complex128)
        P[..., 0] = pp
        P[..., 1] = p2
        P[..., 2] = p3
        P[..., 3] = p4
        A = np.ones(p2.shape + (7,), dtype=np.complex128)
        A[..., 1:] = kernels.coeffs_batch(P.reshape(-1, 6)).reshape(p2.shape + (6,))
        vals = batch(A)
        c = np.fft.fftn(vals, axes=(1, 2, 3)) / (ng * ne * nr)
        out[s:s + chunk] = np.abs(c).sum(axis=(1, 2, 3))
    return out.reshape(shape)


def h23_majorant(p, x, y):
    """Majorant of |a3 a5 - a4^2| on the cuboid, built like ``eval_M``."""
    _check_domain(p, x, y)
    res = fourier_majorant(h23_batch, p, x, y)
    return float(res) if res.ndim == 0 else res
