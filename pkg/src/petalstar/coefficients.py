"""Taylor coefficients a2..a7 of class members.

Two independent routes are provided:

* :func:`coeffs_from_p` evaluates closed-form polynomials in p1..p6;
* :func:`coeffs_from_schwarz` solves ``z f' = (1 + asinh(w)) f`` term by term.

The recurrence is the reference when the two disagree.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .caratheodory import PVector
from .errors import InsufficientCoefficients, NonzeroConstantTerm
from .series import TruncatedSeries, asinh_series, compose, div
from .tolerances import DEFAULT_ORDER

__all__ = [
    "CoeffVector",
    "SchwarzSeries",
    "coeffs_from_p",
    "coeffs_from_p_batch",
    "coeffs_from_schwarz",
    "schwarz_from_p",
    "p_series",
]


@dataclass(frozen=True)
class CoeffVector:
    """a2..a7 of a normalised function (a1 = 1 is implicit)."""

    a2: complex = 0j
    a3: complex = 0j
    a4: complex = 0j
    a5: complex = 0j
    a6: complex = 0j
    a7: complex = 0j

    @classmethod
    def from_sequence(cls, values) -> "CoeffVector":
        """Build from ``[a2, a3, ...]``; missing trailing entries are zero."""
        vals = [complex(v) for v in values][:6]
        return cls(*vals)

    def as_array(self) -> np.ndarray:
        """``[1, a2, ..., a7]`` so that ``arr[n - 1] == a_n``."""
        return np.array([1, self.a2, self.a3, self.a4, self.a5, self.a6, self.a7], dtype=np.complex128)

    def __getitem__(self, n: int) -> complex:
        if not 1 <= n <= 7:
            raise IndexError(f"a_{n} is not stored")
        return complex(self.as_array()[n - 1])

    def allclose(self, other: "CoeffVector", tol: float) -> bool:
        return bool(np.all(np.abs(self.as_array() - other.as_array()) <= tol))


@dataclass(frozen=True, eq=False)
class SchwarzSeries:
    """A Schwarz function w with w(0) = 0, as a truncated series."""

    w: TruncatedSeries

    def __post_init__(self):
        if abs(self.w.coeffs[0]) > 0:
            raise NonzeroConstantTerm("a Schwarz function vanishes at the origin")

    @classmethod
    def from_coeffs(cls, coeffs, order: int = DEFAULT_ORDER) -> "SchwarzSeries":
        """``coeffs`` are w1, w2, ...; the zero constant term is prepended."""
        return cls(TruncatedSeries([0, *coeffs], order))

    @property
    def w1(self):
        return self.w.coeffs[1]

    @property
    def w2(self):
        return self.w.coeffs[2]

    @property
    def w3(self):
        return self.w.coeffs[3]


def coeffs_from_p_batch(P: np.ndarray) -> np.ndarray:
    """(m, 6) array of a2..a7 from an (m, >=6) array of p1..p6."""
    P = np.asarray(P, dtype=np.complex128)
    if P.ndim != 2 or P.shape[1] < 6:
        raise InsufficientCoefficients("need p1..p6 in each row")
    return kernels.coeffs_batch(np.ascontiguousarray(P[:, :6]))


def coeffs_from_p(pv: PVector) -> CoeffVector:
    if len(pv) < 6:
        raise InsufficientCoefficients(f"need p1..p6, got {len(pv)} coefficients")
    return CoeffVector.from_sequence(coeffs_from_p_batch(pv.p[None, :6])[0])


def p_series(pv: PVector, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([1, *pv.p], order)


def schwarz_from_p(pv: PVector, order: int = DEFAULT_ORDER) -> SchwarzSeries:
    """w = (p - 1) / (p + 1)."""
    p = p_series(pv, order)
    return SchwarzSeries(div(p - 1, p + 1))


def coeffs_from_schwarz(w: SchwarzSeries) -> CoeffVector:
    """Solve (n - 1) a_n = sum_{k=1}^{n-1} s_k a_{n-k} with s = asinh(w)."""
    if w.w.order < 7:
        w = SchwarzSeries(TruncatedSeries(w.w.coeffs, 7))
    n = w.w.order
    s = compose(asinh_series(n), w.w).coeffs
    a = np.zeros(8, dtype=np.complex128)
    a[1] = 1.0
    for m in range(2, 8):
        a[m] = np.dot(s[1:m], a[m - 1 : 0 : -1]) / (m - 1)
    return CoeffVector.from_sequence(a[2:8])
