"""Numerical witness search for coefficient-functional bounds.

Candidates are Herglotz measures with at most ``max_atoms`` point masses, so
every candidate lies in P by construction.  A random multi-start phase is
followed by pattern-search polishing of the best starts over the atom angles
and (unnormalised) weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..caratheodory import PVector, herglotz_p
from ..coefficients import coeffs_from_p_batch
from ..functionals import Functional, resolve_functional
from ..tolerances import BOUND_AUDIT

__all__ = ["SearchReport", "witness_search", "functional_values"]

_N_P = 6


@dataclass
class SearchReport:
    functional: str
    claimed_bound: float
    best_value: float
    witness: PVector
    atoms: list = field(default_factory=list)  # (weight, angle) pairs
    samples: int = 0
    seed: int = 0

    @property
    def gap(self) -> float:
        return self.claimed_bound - self.best_value

    @property
    def status(self) -> str:
        return "VIOLATION" if self.best_value > self.claimed_bound + BOUND_AUDIT else "OK"

    def to_dict(self) -> dict:
        return {
            "functional": self.functional,
            "claimed_bound": self.claimed_bound,
            "best_value": round(self.best_value, 12),
            "gap": round(self.gap, 12),
            "status": self.status,
            "samples": self.samples,
            "seed": self.seed,
            "witness_p": [[round(c.real, 12), round(c.imag, 12)] for c in self.witness.p],
            "witness_admissible": self.witness.admissible.value,
            "atoms": [[round(w, 12), round(t, 12)] for w, t in self.atoms],
        }


def functional_values(func: Functional, P: np.ndarray) -> np.ndarray:
    """|F| for each row of an (m, 6) array of p1..p6."""
    A = np.ones((P.shape[0], 7), dtype=np.complex128)
    A[:, 1:] = coeffs_from_p_batch(P)
    return np.abs(func.batch(A))


def _p_from_atoms(u: np.ndarray, th: np.ndarray) -> np.ndarray:
    # rows of u, th: unnormalised weights and angles; zero-weight rows are all zero
    s = u.sum(axis=1, keepdims=True)
    w = np.where(s > 0, u / np.where(s > 0, s, 1.0), 0.0)
    m = np.arange(1, _N_P + 1)
    return 2.0 * np.einsum("ik,ijk->ij", w, np.exp(1j * m[None, :, None] * th[:, None, :]))


def _polish(func, u0, th0, tol):
    k = len(u0)
    x = np.concatenate([th0, u0])
    lo = np.concatenate([np.full(k, -np.inf), np.zeros(k)])
    hi = np.concatenate([np.full(k, np.inf), np.ones(k)])
    h = np.concatenate([np.full(k, 0.1), np.full(k, 0.05)])

    def f(X):
        return functional_values(func, _p_from_atoms(X[:, k:], X[:, :k]))

    fx = f(x[None, :])[0]
    while h.max() >= tol:
        cand = []
        for i in range(2 * k):
            for s in (-1.0, 1.0):
                y = x.copy()
                y[i] = min(max(y[i] + s * h[i], lo[i]), hi[i])
                cand.append(y)
        cand = np.array(cand)
        if cand[:, k:].sum(axis=1).min() <= 0:
            keep = cand[:, k:].sum(axis=1) > 0
            cand = cand[keep]
        vals = f(cand)
        j = int(np.argmax(vals))
        if vals[j] > fx:
            x, fx = cand[j], vals[j]
        else:
            h *= 0.5
    return x[k:], x[:k], float(fx)


def witness_search(functional, claimed_bound: float, budget: int = 20000, seed: int = 0,
                   max_atoms: int = 6, starts: int = 8, tol: float = 1e-10,
                   batch: int = 16384) -> SearchReport:
    """Maximise |functional(coeffs_from_p(p))| over finitely-atomic members of P.

    ``budget`` random Herglotz samples are drawn; the ``starts`` best are
    polished.  The report flags a VIOLATION when the best value exceeds
    ``claimed_bound`` by more than the audit tolerance.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    func = functional if isinstance(functional, Functional) else resolve_functional(functional)
    rng = np.random.default_rng(seed)
    pool_v = np.empty(0)
    pool_u = np.empty((0, max_atoms))
    pool_t = np.empty((0, max_atoms))
    done = 0
    while done < budget:
        m = min(batch, budget - done)
        k = rng.integers(1, max_atoms + 1, size=m)
        u = rng.dirichlet(np.ones(max_atoms), size=m) * (np.arange(max_atoms)[None, :] < k[:, None])
        th = rng.uniform(0.0, 2 * np.pi, size=(m, max_atoms))
        vals = functional_values(func, _p_from_atoms(u, th))
        pool_v = np.concatenate([pool_v, vals])
        pool_u = np.concatenate([pool_u, u])
        pool_t = np.concatenate([pool_t, th])
        order = np.lexsort((np.arange(len(pool_v)), -pool_v))[:starts]
        pool_v, pool_u, pool_t = pool_v[order], pool_u[order], pool_t[order]
        done += m

    best = None
    for v, u, th in zip(pool_v, pool_u, pool_t):
        live = u > 0
        u_pol, th_pol, val = _polish(func, u[live] / u[live].sum(), th[live], tol)
        if val < v:
            u_pol, th_pol, val = u[live] / u[live].sum(), th[live], float(v)
        if best is None or val > best[0]:
            best = (val, u_pol / u_pol.sum(), np.mod(th_pol, 2 * np.pi))
    val, w, th = best
    witness = PVector(herglotz_p(w, th, _N_P))
    atoms = sorted((float(a), float(b)) for a, b in zip(w, th) if a > 0)
    return SearchReport(func.name, float(claimed_bound), val, witness, atoms, budget, seed)
