"""Sampling-certified maximisation over the cuboid [0, 2] x [0, 1] x [0, 1].

The search has three passes: a dense tensor grid, coordinate ascent from the
best grid cells (once over all cells, once over strictly interior cells), and
an explicit finer enumeration of the 6 faces and 12 edges.  Nothing here is
an interval-arithmetic certificate; results carry their resolution.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from ..tolerances import CRITICAL_GRADIENT
from .objective import BOX

__all__ = ["RegionMax", "InteriorEndpoint", "CuboidResult", "cuboid_max", "coordinate_ascent"]

_LO = np.array([b[0] for b in BOX])
_HI = np.array([b[1] for b in BOX])
_CHUNK = 1 << 20


@dataclass(frozen=True)
class RegionMax:
    label: str
    value: float
    argmax: tuple


@dataclass(frozen=True)
class InteriorEndpoint:
    start: tuple
    point: tuple
    value: float
    grad_norm: float | None  # None when the endpoint sits on the boundary

    @property
    def critical(self) -> bool:
        return self.grad_norm is not None and self.grad_norm < CRITICAL_GRADIENT


@dataclass
class CuboidResult:
    max_value: float
    argmax: tuple
    grid_resolution: int
    refinement_tolerance: float
    face_edge_table: list = field(default_factory=list)
    interior_endpoints: list = field(default_factory=list)

    @property
    def interior_critical_points(self) -> list:
        return [e for e in self.interior_endpoints if e.critical]

    def region(self, label: str) -> RegionMax:
        for r in self.face_edge_table:
            if r.label == label:
                return r
        raise KeyError(label)


def _key(value, point):
    # larger value first, then lexicographically smaller point
    return (-value, tuple(point))


def _eval(objective, pts: np.ndarray) -> np.ndarray:
    return np.asarray(objective(pts[:, 0], pts[:, 1], pts[:, 2]), dtype=float).reshape(-1)


def coordinate_ascent(objective, start, free=(0, 1, 2), step=None, tol: float = 1e-10,
                      max_iter: int = 100000):
    """Pattern search with halving steps, confined to the cuboid.

    Only coordinates listed in ``free`` move.  Each sweep evaluates all
    +/- step neighbours at once and takes the best strict improvement.
    """
    v = np.array(start, dtype=float)
    free = tuple(free)
    h = np.array(step if step is not None else [0.01 * (_HI[i] - _LO[i]) for i in range(3)], float)
    fv = _eval(objective, v[None, :])[0]
    for _ in range(max_iter):
        if max(h[i] for i in free) < tol:
            break
        cand = []
        for i in free:
            for s in (-1.0, 1.0):
                w = v.copy()
                w[i] = min(max(w[i] + s * h[i], _LO[i]), _HI[i])
                cand.append(w)
        cand = np.array(cand)
        vals = _eval(objective, cand)
        j = int(np.argmax(vals))
        if vals[j] > fv:
            v, fv = cand[j], vals[j]
        else:
            h *= 0.5
    return v, float(fv)


def _axes(resolution):
    return [np.linspace(lo, hi, resolution) for lo, hi in BOX]


def _slab_scan(objective, axes, i0, i1, top_k, interior_only):
    ps, xs, ys = axes
    n = len(xs)
    P, X, Y = np.meshgrid(ps[i0:i1], xs, ys, indexing="ij")
    vals = np.asarray(objective(P, X, Y), dtype=float).reshape(P.shape)
    if interior_only:
        vals = vals.copy()
        mask = np.ones_like(vals, dtype=bool)
        mask[:, 1:-1, 1:-1] = False
        gi = np.arange(i0, i1)
        mask[(gi == 0) | (gi == len(ps) - 1)] = True
        vals[mask] = -np.inf
    flat = vals.ravel()
    k = min(top_k, flat.size)
    kth = np.partition(flat, flat.size - k)[flat.size - k]
    idx = np.nonzero(flat >= kth)[0]
    order = np.lexsort((idx, -flat[idx]))[:k]
    idx = idx[order]
    glob = idx + i0 * n * n
    return [(float(flat[i]), int(g)) for i, g in zip(idx, glob) if np.isfinite(flat[i])]


def _grid_top(objective, axes, top_k, interior_only, workers, slab):
    res_p = len(axes[0])
    bounds = [(i, min(i + slab, res_p)) for i in range(0, res_p, slab)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(lambda b: _slab_scan(objective, axes, b[0], b[1], top_k, interior_only), bounds))
    else:
        parts = [_slab_scan(objective, axes, a, b, top_k, interior_only) for a, b in bounds]
    merged = sorted((c for part in parts for c in part), key=lambda c: (-c[0], c[1]))
    n = len(axes[1])
    out = []
    for val, g in merged[:top_k]:
        i, rem = divmod(g, n * n)
        j, k = divmod(rem, n)
        out.append((val, (float(axes[0][i]), float(axes[1][j]), float(axes[2][k]))))
    return out


def _numeric_grad(objective, v, h=1e-6):
    g = np.empty(3)
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        vals = _eval(objective, np.array([v + e, v - e]))
        g[i] = (vals[0] - vals[1]) / (2 * h)
    return g


def _faces_and_edges(resolution):
    """Labelled (fixed coordinates, free axes) for the 6 faces and 12 edges."""
    names = "pxy"
    faces, edges = [], []
    for i in range(3):
        for side in (0, 1):
            fixed = {i: BOX[i][side]}
            free = tuple(j for j in range(3) if j != i)
            faces.append((f"face {names[i]}={BOX[i][side]:g}", fixed, free))
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for si, sj in product((0, 1), repeat=2):
            fixed = {i: BOX[i][si], j: BOX[j][sj]}
            free = tuple(k for k in range(3) if k not in fixed)
            edges.append((f"edge {names[i]}={BOX[i][si]:g},{names[j]}={BOX[j][sj]:g}", fixed, free))
    return faces, edges


def _scan_region(objective, fixed, free, fine, tol):
    axes = _axes(fine)
    grids = np.meshgrid(*[axes[j] for j in free], indexing="ij")
    pts = np.empty(grids[0].shape + (3,))
    for i, v in fixed.items():
        pts[..., i] = v
    for j, g in zip(free, grids):
        pts[..., j] = g
    flat = pts.reshape(-1, 3)
    vals = np.concatenate([_eval(objective, flat[s:s + _CHUNK]) for s in range(0, len(flat), _CHUNK)])
    best = int(np.argmax(vals))
    step = [0.0, 0.0, 0.0]
    for j in free:
        step[j] = (BOX[j][1] - BOX[j][0]) / (fine - 1)
    v, fv = coordinate_ascent(objective, flat[best], free=free, step=step, tol=tol)
    if fv < vals[best]:
        v, fv = flat[best], float(vals[best])
    return fv, tuple(float(c) for c in v)


def cuboid_max(objective: Callable, resolution: int = 201, tol: float = 1e-10, top_k: int = 20,
               boundary_factor: int = 10, gradient: Callable | None = None, workers: int = 1,
               slab: int = 8) -> CuboidResult:
    """Maximise a vectorised ``objective(p, x, y)`` over the closed cuboid.

    ``gradient(p, x, y)``, when given, is used to classify interior
    refinement endpoints; otherwise central differences are used.  The
    reduction is independent of ``workers`` and ``slab``.
    """
    axes = _axes(resolution)
    spacing = [(hi - lo) / (resolution - 1) for lo, hi in BOX]
    table: list[RegionMax] = []

    top = _grid_top(objective, axes, top_k, False, workers, slab)
    table.append(RegionMax("grid", top[0][0], top[0][1]))

    refined = []
    for _, start in top:
        v, fv = coordinate_ascent(objective, start, step=spacing, tol=tol)
        refined.append((fv, tuple(float(c) for c in v)))
    best_ref = min(refined, key=lambda r: _key(*r))
    table.append(RegionMax("refined", *best_ref))

    interior = []
    inner_top = _grid_top(objective, axes, top_k, True, workers, slab) if resolution > 2 else []
    margin = 1e-6
    for _, start in inner_top:
        v, fv = coordinate_ascent(objective, start, step=spacing, tol=tol)
        inside = bool(np.all(v > _LO + margin) and np.all(v < _HI - margin))
        gn = None
        if inside:
            g = gradient(*v) if gradient is not None else _numeric_grad(objective, v)
            gn = float(np.linalg.norm(g))
        interior.append(InteriorEndpoint(start, tuple(float(c) for c in v), fv, gn))
    if interior:
        bi = min(interior, key=lambda e: _key(e.value, e.point))
        table.append(RegionMax("interior", bi.value, bi.point))

    fine = (resolution - 1) * boundary_factor + 1
    faces, edges = _faces_and_edges(fine)
    for label, fixed, free in faces + edges:
        fv, pt = _scan_region(objective, fixed, free, fine, tol)
        table.append(RegionMax(label, fv, pt))

    best = min(table, key=lambda r: _key(r.value, r.argmax))
    return CuboidResult(
        max_value=best.value,
        argmax=best.argmax,
        grid_resolution=resolution,
        refinement_tolerance=tol,
        face_edge_table=table,
        interior_endpoints=interior,
    )
