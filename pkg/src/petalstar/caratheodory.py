"""The Caratheodory class P: parametrisation, admissibility and sampling.

A function ``p(z) = 1 + p_1 z + p_2 z^2 + ...`` with positive real part is
represented here only through its first few coefficients.  Admissibility of a
finite coefficient vector is decided by the Caratheodory-Toeplitz criterion;
random admissible vectors come from the Herglotz representation (convex
combinations of rotated half-plane kernels).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import InadmissibleInput, InvalidParameters
from .tolerances import LEMMA, PARAM_MODULUS, TOEPLITZ_BAND

__all__ = [
    "Verdict",
    "CaratheodoryParams",
    "PVector",
    "LemmaCheck",
    "expand_p234",
    "toeplitz_admissible",
    "herglotz_p",
    "sample_random",
    "sample_batch",
    "random_params",
    "check_lemma_inequalities",
    "LEMMAS",
]


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    BOUNDARY = "boundary"

    @property
    def admissible(self) -> bool:
        return self is not Verdict.NO


@dataclass(frozen=True)
class CaratheodoryParams:
    """Free variables of the p2/p3/p4 representation.

    ``p1`` is real in [0, 2] (P is rotation invariant), the rest lie in the
    closed unit disk.
    """

    p1: float
    gamma: complex = 0j
    eta: complex = 0j
    rho_param: complex = 0j

    def __post_init__(self):
        tol = PARAM_MODULUS
        if not (-tol <= float(np.real(self.p1)) <= 2 + tol) or abs(np.imag(self.p1)) > tol:
            raise InvalidParameters(f"p1 must be real in [0, 2], got {self.p1}")
        for name in ("gamma", "eta", "rho_param"):
            if abs(getattr(self, name)) > 1 + tol:
                raise InvalidParameters(f"|{name}| must be <= 1, got {abs(getattr(self, name))}")
        object.__setattr__(self, "p1", float(np.real(self.p1)))
        for name in ("gamma", "eta", "rho_param"):
            object.__setattr__(self, name, complex(getattr(self, name)))


@dataclass(frozen=True, eq=False)
class PVector:
    """Coefficients p_1..p_n with a Toeplitz admissibility verdict."""

    p: np.ndarray
    admissible: Verdict | None = field(default=None)

    def __post_init__(self):
        arr = np.asarray(self.p, dtype=np.complex128).ravel().copy()
        arr.flags.writeable = False
        object.__setattr__(self, "p", arr)
        if self.admissible is None:
            object.__setattr__(self, "admissible", toeplitz_admissible(arr))

    @classmethod
    def from_params(cls, params: CaratheodoryParams) -> "PVector":
        return cls([params.p1, *expand_p234(params)])

    def __len__(self):
        return len(self.p)

    def __getitem__(self, k):
        """1-based access: ``pv[1]`` is p_1."""
        if k < 1:
            raise IndexError("Caratheodory coefficients are indexed from 1")
        return self.p[k - 1]

    def padded(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=np.complex128)
        out[: min(n, len(self.p))] = self.p[:n]
        return out


def expand_p234(params: CaratheodoryParams) -> tuple[complex, complex, complex]:
    """p2, p3, p4 in terms of p1 and the free parameters gamma, eta, rho."""
    p = params.p1
    g, e, r = params.gamma, params.eta, params.rho_param
    q = 4.0 - p * p
    ag = abs(g) ** 2
    ae = abs(e) ** 2
    p2 = (p * p + g * q) / 2
    p3 = (p**3 + 2 * p * q * g - p * q * g * g + 2 * q * (1 - ag) * e) / 4
    p4 = (
        p**4
        + q * g * (p * p * (g * g - 3 * g + 3) + 4 * g)
        - 4 * q * (1 - ag) * (p * (g - 1) * e + g.conjugate() * e * e - (1 - ae) * r)
    ) / 8
    return complex(p2), complex(p3), complex(p4)


def _toeplitz(p: np.ndarray) -> np.ndarray:
    n = len(p)
    col = np.concatenate([[2.0], np.conj(p)])
    idx = np.arange(n + 1)
    diff = idx[None, :] - idx[:, None]
    T = np.where(diff >= 0, np.concatenate([[2.0], p])[np.abs(diff)], col[np.abs(diff)])
    return T


def toeplitz_admissible(pv) -> Verdict:
    """Caratheodory-Toeplitz test on the (n+1)x(n+1) Hermitian Toeplitz matrix.

    The matrix has 2 on the diagonal and p_1..p_n on the super-diagonals.
    """
    p = pv.p if isinstance(pv, PVector) else np.asarray(pv, dtype=np.complex128).ravel()
    if len(p) == 0:
        raise ValueError("need at least one coefficient")
    lam = float(np.linalg.eigvalsh(_toeplitz(p)).min())
    if lam > TOEPLITZ_BAND:
        return Verdict.YES
    if lam >= -TOEPLITZ_BAND:
        return Verdict.BOUNDARY
    return Verdict.NO


def herglotz_p(weights: Sequence[float], angles: Sequence[float], n: int) -> np.ndarray:
    """p_m = 2 sum_k w_k exp(i m theta_k) for m = 1..n."""
    w = np.asarray(weights, dtype=float)
    th = np.asarray(angles, dtype=float)
    m = np.arange(1, n + 1)
    return 2.0 * (w[None, :] * np.exp(1j * m[:, None] * th[None, :])).sum(axis=1)


def sample_random(n: int, atoms: int, seed: int) -> PVector:
    """One random admissible vector built from ``atoms`` Herglotz atoms."""
    if atoms < 1:
        raise ValueError("atoms must be >= 1")
    rng = np.random.default_rng(seed)
    w = rng.dirichlet(np.ones(atoms))
    th = rng.uniform(0.0, 2 * np.pi, atoms)
    p = herglotz_p(w, th, n)
    return PVector(p)


def sample_batch(m: int, n: int, rng: np.random.Generator, max_atoms: int = 6) -> np.ndarray:
    """(m, n) array of admissible coefficient vectors, atom counts uniform in 1..max_atoms.

    Admissibility holds by construction; no Toeplitz test is run.
    """
    k = rng.integers(1, max_atoms + 1, size=m)
    w = rng.dirichlet(np.ones(max_atoms), size=m)
    w *= np.arange(max_atoms)[None, :] < k[:, None]
    w /= w.sum(axis=1, keepdims=True)
    th = rng.uniform(0.0, 2 * np.pi, size=(m, max_atoms))
    out = np.empty((m, n), dtype=np.complex128)
    for j in range(1, n + 1):
        out[:, j - 1] = 2.0 * (w * np.exp(1j * j * th)).sum(axis=1)
    return out


def _disk(rng, size):
    return np.sqrt(rng.uniform(0, 1, size)) * np.exp(2j * np.pi * rng.uniform(0, 1, size))


def random_params(rng: np.random.Generator) -> CaratheodoryParams:
    """Random parameters; a quarter of the draws land on |gamma| = 1 or |eta| = 1."""
    g, e, r = _disk(rng, 3)
    u = rng.uniform()
    if u < 0.125:
        g /= abs(g)
    elif u < 0.25:
        e /= abs(e)
    return CaratheodoryParams(float(rng.uniform(0, 2)), g, e, r)


# -- lemma predicates -------------------------------------------------------


class LemmaCheck(NamedTuple):
    name: str
    lam: float | None
    lhs: float
    bound: float
    holds: bool


def _ma_minda_bound(lam):
    if lam <= 0:
        return 2 - 4 * lam
    if lam <= 1:
        return 2.0
    return 4 * lam - 2


def _pomi_cube_bound(lam):
    if lam <= 4 / 3:
        return 2 * abs(lam - 4)
    return 2 * lam * np.sqrt(lam / (lam - 1))


def _product_bound(lam):
    return 2.0 if 0 <= lam <= 1 else 2 * abs(2 * lam - 1)


class _Lemma(NamedTuple):
    name: str
    lo: float | None
    hi: float | None
    lhs: Callable
    bound: Callable
    min_n: int


# lambda-free lemmas carry lo = hi = None
LEMMAS: tuple[_Lemma, ...] = (
    _Lemma("coefficient_bound", None, None,
           lambda p, lam: float(np.abs(p).max()), lambda lam: 2.0, 1),
    _Lemma("fourth_order", None, None,
           lambda p, lam: abs(p[0] ** 4 - 3 * p[0] ** 2 * p[1] + p[1] ** 2 + 2 * p[0] * p[2] - p[3]),
           lambda lam: 2.0, 4),
    _Lemma("third_order", None, None,
           lambda p, lam: abs(p[2] - 2 * p[0] * p[1] + p[0] ** 3), lambda lam: 2.0, 3),
    _Lemma("ma_minda", -1.0, 2.0,
           lambda p, lam: abs(p[1] - lam * p[0] ** 2), _ma_minda_bound, 2),
    _Lemma("ma_minda_refined_low", 0.0, 0.5,
           lambda p, lam: abs(p[1] - lam * p[0] ** 2) + lam * abs(p[0]) ** 2, lambda lam: 2.0, 2),
    _Lemma("ma_minda_refined_high", 0.5, 1.0,
           lambda p, lam: abs(p[1] - lam * p[0] ** 2) + (1 - lam) * abs(p[0]) ** 2, lambda lam: 2.0, 2),
    _Lemma("product", -1.0, 2.0,
           lambda p, lam: max(abs(p[a + b - 1] - lam * p[a - 1] * p[b - 1])
                              for a in range(1, len(p)) for b in range(a, len(p) - a + 1)),
           _product_bound, 2),
    _Lemma("cube_vs_third", -1.0, 4.0,
           lambda p, lam: abs(p[0] ** 3 - lam * p[2]), _pomi_cube_bound, 3),
    _Lemma("p1_cube", 0.0, 1.0,
           lambda p, lam: abs(lam * p[0] ** 3 - (lam + 1) * p[0] * p[1] + p[2]), lambda lam: 2.0, 3),
)


def check_lemma_inequalities(pv: PVector, grid: int = 21) -> list[LemmaCheck]:
    """Evaluate each inequality on ``pv`` over its lambda grid.

    Lemmas with a parameter report one row per grid point.  Raises
    :class:`InadmissibleInput` when ``pv`` fails the Toeplitz test.
    """
    if len(pv) < 4:
        raise ValueError("lemma checks need at least p1..p4")
    if pv.admissible is Verdict.NO:
        raise InadmissibleInput("coefficient vector is outside P")
    p = pv.p
    rows = []
    for lemma in LEMMAS:
        lams = [None] if lemma.lo is None else np.linspace(lemma.lo, lemma.hi, grid)
        for lam in lams:
            lhs = float(lemma.lhs(p, lam))
            b = float(lemma.bound(lam))
            rows.append(LemmaCheck(lemma.name, None if lam is None else float(lam), lhs, b,
                                   lhs <= b + LEMMA))
    return rows
