"""Hankel determinants and related coefficient functionals.

All named functionals are thin wrappers over :func:`hankel` or over explicit
polynomials in a2..a7.  Vectorised twins (suffix ``_batch``) take an
``(m, 7)`` array whose column ``n - 1`` holds ``a_n`` (column 0 is 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .coefficients import CoeffVector
from .errors import UnknownFunctional

__all__ = [
    "FunctionalValue",
    "hankel",
    "fekete_szego",
    "h22",
    "h23",
    "h31",
    "omegas",
    "h41",
    "BoundConstant",
    "paper_bound_constants",
    "omega_bounds",
    "a6_a7_bounds",
    "h41_assembly_bound",
    "resolve_functional",
    "FUNCTIONAL_NAMES",
]


@dataclass(frozen=True)
class FunctionalValue:
    name: str
    value: complex

    @property
    def abs(self) -> float:
        return abs(self.value)


def _arr(a) -> np.ndarray:
    if isinstance(a, CoeffVector):
        return a.as_array()
    arr = np.asarray(a, dtype=np.complex128)
    return arr


def hankel(q: int, n: int, a) -> complex:
    """H_{q,n}: determinant of the q x q matrix with entries a_{n+i+j}."""
    arr = _arr(a)
    if n + 2 * q - 2 > arr.shape[-1]:
        raise IndexError(f"H_{q},{n} needs a_{n + 2 * q - 2}")
    idx = n - 1 + np.arange(q)[:, None] + np.arange(q)[None, :]
    return complex(np.linalg.det(arr[idx]))


# -- batch polynomials (column n-1 holds a_n) --------------------------------


def _cols(A):
    A = np.asarray(A, dtype=np.complex128)
    return (A[..., k] for k in range(1, 7))


def fekete_szego_batch(A, mu):
    a2, a3, *_ = _cols(A)
    return a3 - mu * a2 * a2


def h22_batch(A):
    a2, a3, a4, *_ = _cols(A)
    return a2 * a4 - a3 * a3


def h23_batch(A):
    _, a3, a4, a5, *_ = _cols(A)
    return a3 * a5 - a4 * a4


def h31_batch(A):
    a2, a3, a4, a5, *_ = _cols(A)
    return 2 * a2 * a3 * a4 - a3**3 - a4 * a4 - a2 * a2 * a5 + a3 * a5


def omegas_batch(A):
    a2, a3, a4, a5, a6, _ = _cols(A)
    o1 = a3 * a6 - a4 * a5 - a2 * (a2 * a6 - a3 * a5) + a4 * (a2 * a4 - a3 * a3)
    o2 = (a4 * a6 - a5 * a5) - a2 * (a3 * a6 - a4 * a5) + a3 * (a3 * a5 - a4 * a4)
    o3 = a2 * (a4 * a6 - a5 * a5) - a3 * (a3 * a6 - a4 * a5) + a4 * (a3 * a5 - a4 * a4)
    return o1, o2, o3


def h41_batch(A):
    _, _, a4, a5, a6, a7 = _cols(A)
    o1, o2, o3 = omegas_batch(A)
    return a7 * h31_batch(A) - a6 * o1 + a5 * o2 - a4 * o3


# -- scalar wrappers ---------------------------------------------------------


def fekete_szego(a: CoeffVector, mu: complex) -> FunctionalValue:
    return FunctionalValue(f"FeketeSzego({mu})", complex(fekete_szego_batch(_arr(a), mu)))


def h22(a: CoeffVector) -> FunctionalValue:
    return FunctionalValue("H22", complex(h22_batch(_arr(a))))


def h23(a: CoeffVector) -> FunctionalValue:
    return FunctionalValue("H23", complex(h23_batch(_arr(a))))


def h31(a: CoeffVector) -> FunctionalValue:
    return FunctionalValue("H31", complex(h31_batch(_arr(a))))


def omegas(a: CoeffVector) -> tuple[FunctionalValue, FunctionalValue, FunctionalValue]:
    o = omegas_batch(_arr(a))
    return tuple(FunctionalValue(f"Omega{k + 1}", complex(v)) for k, v in enumerate(o))


def h41(a: CoeffVector) -> FunctionalValue:
    """Assembled from H3,1 and the three Omega minors (no 4x4 determinant)."""
    return FunctionalValue("H41", complex(h41_batch(_arr(a))))


# -- functional registry for searches and audits ----------------------------


class Functional(NamedTuple):
    name: str
    batch: Callable[[np.ndarray], np.ndarray]
    sharp_bound: float | None


def _coef(n):
    return lambda A: np.asarray(A)[..., n - 1]


_REGISTRY = {
    "a2": Functional("a2", _coef(2), 1.0),
    "a3": Functional("a3", _coef(3), 0.5),
    "a4": Functional("a4", _coef(4), 1 / 3),
    "a5": Functional("a5", _coef(5), None),
    "a6": Functional("a6", _coef(6), None),
    "a7": Functional("a7", _coef(7), None),
    "h22": Functional("h22", h22_batch, 0.25),
    "h23": Functional("h23", h23_batch, None),
    "h31": Functional("h31", h31_batch, 1 / 9),
    "h41": Functional("h41", h41_batch, None),
}

FUNCTIONAL_NAMES = tuple(_REGISTRY) + ("fs:<mu>",)


def resolve_functional(name: str) -> Functional:
    """Look up a functional by CLI name; ``fs:0.5`` is a3 - 0.5 a2^2."""
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("fs:"):
        try:
            mu = complex(name[3:].replace("i", "j"))
        except ValueError:
            raise UnknownFunctional(f"bad Fekete-Szego parameter in {name!r}") from None
        return Functional(name, lambda A, mu=mu: fekete_szego_batch(A, mu), None)
    raise UnknownFunctional(f"unknown functional {name!r}; choose from {', '.join(FUNCTIONAL_NAMES)}")


# -- bound constants ---------------------------------------------------------


class BoundConstant(NamedTuple):
    name: str
    exact: str
    value: float


_OMEGA1_TERMS = (265984, [(32000, 3, 43), (37760, 30, 61), (29184, 285, 41)], 460800)
_OMEGA2_TERMS = (
    1136896,
    [(716800, 3, 157), (81920, 3, 67), (212736, 2, 35), (74240, 21, 307), (10240, 6, 23)],
    3686400,
)
_OMEGA3_TERMS = (
    221394816,
    [(55296000, 6, 599), (79626240, 6, 77), (185794560, 21, 251), (79626240, 6, 23), (5971968, 10, 1)],
    597196800,
)


def _radical(terms) -> tuple[str, float]:
    head, roots, den = terms
    value = (head + sum(c * math.sqrt(n / d) for c, n, d in roots)) / den
    parts = [str(head)] + [f"{c}*sqrt({n}/{d})" if d != 1 else f"{c}*sqrt({n})" for c, n, d in roots]
    return f"({' + '.join(parts)})/{den}", value


def omega_bounds() -> dict[str, BoundConstant]:
    out = {}
    for k, terms in enumerate((_OMEGA1_TERMS, _OMEGA2_TERMS, _OMEGA3_TERMS), start=1):
        exact, value = _radical(terms)
        out[f"omega{k}"] = BoundConstant(f"omega{k}", exact, value)
    return out


def _frac(name, fr: Fraction) -> BoundConstant:
    return BoundConstant(name, f"{fr.numerator}/{fr.denominator}", float(fr))


def a6_a7_bounds() -> dict[str, BoundConstant]:
    """|a6| and |a7| constants: the lemma statement and the value its proof reaches."""
    a6_terms = Fraction(5760 + 6880 + 1728 + 4320, 28800)
    a7_terms = Fraction(362968 + 489600 + 276480 + 230400 + 432000, 2073600)
    return {
        "a6": _frac("a6", a6_terms),
        "a7_stated": _frac("a7_stated", Fraction(1031, 1080)),
        "a7_proof": _frac("a7_proof", a7_terms),
    }


def h41_assembly_bound(a4: float, a5: float, a6: float, a7: float, h31_bound: float,
                       o1: float, o2: float, o3: float) -> float:
    """Triangle inequality applied to a7 H31 - a6 O1 + a5 O2 - a4 O3."""
    return a7 * h31_bound + a6 * o1 + a5 * o2 + a4 * o3


def paper_bound_constants() -> list[BoundConstant]:
    """Every published bound constant, recomputed from its exact form."""
    om = omega_bounds()
    aa = a6_a7_bounds()
    table = [
        _frac("a2", Fraction(1)),
        _frac("a3", Fraction(1, 2)),
        _frac("a4", Fraction(1, 3)),
        _frac("a5", Fraction(907, 1632)),
        aa["a6"],
        aa["a7_stated"],
        aa["a7_proof"],
        _frac("h22", Fraction(1, 4)),
        _frac("h31", Fraction(1, 9)),
        BoundConstant("h23", "0.146048", 0.146048),
        om["omega1"],
        om["omega2"],
        om["omega3"],
        BoundConstant("h41", "0.428001", 0.428001),
    ]
    assembled = h41_assembly_bound(1 / 3, 907 / 1632, aa["a6"].value, aa["a7_proof"].value, 1 / 9,
                                   om["omega1"].value, om["omega2"].value, om["omega3"].value)
    table.append(BoundConstant(
        "h41_assembly",
        "a7_proof*1/9 + a6*omega1 + 907/1632*omega2 + 1/3*omega3",
        assembled,
    ))
    return table
