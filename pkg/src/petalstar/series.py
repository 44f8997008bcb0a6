"""Truncated complex power series with a fixed truncation order.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0 ... c_N``.  Every
binary operation truncates to the smaller of the two operand orders, and no
operation ever reads a coefficient beyond index ``N``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import NonzeroConstantTerm, ZeroLeadingCoefficient
from .tolerances import DEFAULT_ORDER, DIV_LEADING

__all__ = [
    "TruncatedSeries",
    "mul",
    "div",
    "exp",
    "sinh",
    "compose",
    "asinh_series",
    "sinh_series",
    "integrate_over_t",
]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Maclaurin coefficients ``c_0 .. c_N`` of an analytic function.

    ``coeffs`` shorter than ``order + 1`` are zero padded, longer ones are
    truncated.  When ``order`` is omitted it is inferred from ``coeffs``.
    """

    coeffs: np.ndarray
    order: int = -1

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128).ravel()
        order = self.order if self.order >= 0 else max(len(c) - 1, 1)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        out = np.zeros(order + 1, dtype=np.complex128)
        n = min(len(c), order + 1)
        out[:n] = c[:n]
        out.flags.writeable = False
        object.__setattr__(self, "coeffs", out)
        object.__setattr__(self, "order", order)

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, power: int, coeff=1.0, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        if power <= order:
            c[power] = coeff
        return cls(c, order)

    # access ---------------------------------------------------------------

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={np.round(self.coeffs, 12).tolist()})"

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def allclose(self, other: "TruncatedSeries", tol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self.coeffs[:n] - other.coeffs[:n]) <= tol))

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * other, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        return TruncatedSeries(self.coeffs / other, self.order)

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**k`` keeping the same order."""
        c = np.zeros(self.order + 1, dtype=np.complex128)
        if k <= self.order:
            c[k:] = self.coeffs[: self.order + 1 - k]
        return TruncatedSeries(c, self.order)

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the result has order ``N - 1`` (at least 1)."""
        k = np.arange(1, self.order + 1)
        return TruncatedSeries(self.coeffs[1:] * k, max(self.order - 1, 1))

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (scalar or array)."""
        z = np.asarray(z, dtype=np.complex128)
        out = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            out = out * z + c
        return out


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1], n)


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    if abs(b.coeffs[0]) < DIV_LEADING:
        raise ZeroLeadingCoefficient(f"|b0| = {abs(b.coeffs[0]):.3e} below {DIV_LEADING}")
    bc = b.coeffs
    q = np.zeros(n + 1, dtype=np.complex128)
    q[0] = a.coeffs[0] / bc[0]
    for k in range(1, n + 1):
        q[k] = (a.coeffs[k] - np.dot(bc[1 : k + 1], q[k - 1 :: -1][:k])) / bc[0]
    return TruncatedSeries(q, n)


def _require_zero_constant(a: TruncatedSeries, what: str):
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"{what} needs a zero constant term, got {a.coeffs[0]}")


def exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, from (e^a)' = a' e^a."""
    _require_zero_constant(a, "exp")
    n = a.order
    ja = a.coeffs * np.arange(n + 1)
    e = np.zeros(n + 1, dtype=np.complex128)
    e[0] = 1.0
    for k in range(1, n + 1):
        e[k] = np.dot(ja[1 : k + 1], e[k - 1 :: -1][:k]) / k
    return TruncatedSeries(e, n)


def sinh(a: TruncatedSeries) -> TruncatedSeries:
    # built on exp so only one transcendental kernel needs auditing
    return (exp(a) - exp(-a)) * 0.5


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme, truncated at the common order."""
    _require_zero_constant(inner, "compose (inner)")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    out = TruncatedSeries.constant(0, n)
    # inner has no constant term, so outer coefficients above n never matter
    for c in outer.coeffs[: n + 1][::-1]:
        out = mul(out, inner) + c
    return out


def asinh_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sinh^{-1}(z) = sum_k (-1)^k (2k)! / (4^k (k!)^2 (2k+1)) z^(2k+1)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    c = np.zeros(order + 1, dtype=np.complex128)
    for k in range((order - 1) // 2 + 1):
        c[2 * k + 1] = (-1) ** k * comb(2 * k, k) / (4**k * (2 * k + 1))
    return TruncatedSeries(c, order)


def sinh_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    fact = 1.0
    for k in range(1, order + 1):
        fact *= k
        if k % 2:
            c[k] = 1.0 / fact
    return TruncatedSeries(c, order)


def integrate_over_t(a: TruncatedSeries) -> TruncatedSeries:
    """The series of the integral from 0 to z of a(t)/t dt."""
    _require_zero_constant(a, "integrate_over_t")
    c = np.zeros(a.order + 1, dtype=np.complex128)
    k = np.arange(1, a.order + 1)
    c[1:] = a.coeffs[1:] / k
    return TruncatedSeries(c, a.order)
