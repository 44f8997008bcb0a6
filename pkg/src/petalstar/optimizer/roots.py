"""Real roots of a polynomial on an interval."""
from __future__ import annotations

import numpy as np


def _polyval(c, x):
    # c ascending: c[0] + c[1] x + ...
    out = 0.0
    for a in reversed(c):
        out = out * x + a
    return out


def poly_roots(coeffs, interval, samples: int = 20001, tol: float = 1e-12) -> list[float]:
    """Real roots in the open ``interval`` of ``sum(coeffs[k] * x**k)``.

    Sign changes on a uniform grid are bracketed, bisected and then polished
    with Newton steps.  Roots are returned ascending; a root of even
    multiplicity only shows up when it falls on a grid node.
    """
    c = [float(v) for v in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if len(c) < 2:
        raise ValueError("polynomial degree must be >= 1")
    dc = [k * c[k] for k in range(1, len(c))]
    lo, hi = map(float, interval)
    xs = np.linspace(lo, hi, samples)
    vals = np.array([_polyval(c, x) for x in xs])
    roots = []
    for i in range(1, samples - 1):
        if vals[i] == 0.0:
            roots.append(float(xs[i]))
    for i in range(samples - 1):
        a, b = xs[i], xs[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0 or fb == 0.0 or (fa > 0) == (fb > 0):
            continue
        for _ in range(200):
            mid = 0.5 * (a + b)
            fm = _polyval(c, mid)
            if fm == 0.0 or b - a < tol:
                break
            if (fm > 0) == (fa > 0):
                a, fa = mid, fm
            else:
                b = mid
        x = 0.5 * (a + b)
        for _ in range(5):
            d = _polyval(dc, x)
            if d == 0.0:
                break
            step = _polyval(c, x) / d
            if not xs[i] <= x - step <= xs[i + 1]:
                break
            x -= step
            if abs(step) < 1e-16 * max(1.0, abs(x)):
                break
        roots.append(float(x))
    return sorted(r for r in roots if lo < r < hi)
