"""Acceptance criteria 1-9, one printed PASS/FAIL line per criterion.

Run under pytest (``pytest tests/test_acceptance.py -v -s``) or directly
(``python3 tests/test_acceptance.py``).  Tolerances are the ones pinned in the
acceptance table.  Criterion 6 is split: the recomputed constants (6a) pass;
the H4,1 assembly (6b) does not reproduce the published 0.428001 and is kept
as a strict expected failure so the gap stays visible.
"""
from __future__ import annotations

import math
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from petalstar.caratheodory import PVector, Verdict, check_lemma_inequalities, sample_batch
from petalstar.coefficients import coeffs_from_p_batch, coeffs_from_schwarz, schwarz_from_p
from petalstar.extremal import extremal_fn
from petalstar.functionals import (a6_a7_bounds, fekete_szego, h22, h22_batch, h23_batch, h31, h31_batch,
                                   h41_assembly_bound, h41_batch, omega_bounds)
from petalstar.optimizer import (a5_decomposition_bound, cuboid_max, edge_functions, eval_M, grad_M, poly_roots,
                                 quad_max, witness_search)

SEED = 20240611


def _line(num, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"


def _argmax_1d(fn, lo, hi, n=400001):
    t = np.linspace(lo, hi, n)
    v = fn(t)
    i = int(np.argmax(v))
    return float(t[i]), float(v[i])


def criterion_1():
    rng = np.random.default_rng([SEED, 1])
    P = sample_batch(10_000, 6, rng)
    closed = coeffs_from_p_batch(P)
    err = 0.0
    for row, a in zip(P, closed):
        rec = coeffs_from_schwarz(schwarz_from_p(PVector(row, admissible=Verdict.YES), 7))
        err = max(err, float(np.abs(rec.as_array()[1:] - a).max()))
    return err <= 1e-10, f"coeffs_from_p vs coeffs_from_schwarz on 10^4 samples, max diff {err:.2e} (tol 1e-10)"


def criterion_2():
    q, _ = quad_max(Fraction(-17, 144), Fraction(11, 12), Fraction(0))
    b = a5_decomposition_bound()
    ok = q == Fraction(121, 68) and b == Fraction(907, 1632)
    return ok, f"quad_max = {q}, a5_decomposition_bound = {b} (exact)"


def criterion_3():
    res = cuboid_max(eval_M, resolution=201, gradient=grad_M)
    dv = res.max_value - 1 / 9
    da = max(abs(a - b) for a, b in zip(res.argmax, (0, 0, 1)))
    crit = res.interior_critical_points
    ok = -1e-6 <= dv <= 1e-4 and da <= 1e-3 and not crit
    return ok, (f"cuboid max {res.max_value:.12f} (1/9 {dv:+.1e}) at {tuple(round(c, 6) for c in res.argmax)}, "
                f"{len(crit)} interior critical points")


def criterion_4():
    ef = edge_functions()
    checks = []
    gx, gy = np.meshgrid(np.linspace(0, 1, 11), np.linspace(0, 1, 11))
    v = eval_M(np.full(gx.shape, 2.0), gx, gy)
    checks.append(("M(2,.,.)", float(np.abs(v - 25 / 1296).max()) <= 1e-4))
    x, m = _argmax_1d(ef["r3"].printed, 0, 2)
    checks.append(("r3", abs(m - 0.0914236) <= 1e-4 and abs(x - 1.32162) <= 1e-4))
    x, m = _argmax_1d(ef["r1"].printed, 0, 2)
    checks.append(("r1", abs(m - 0.0342145) <= 1e-4 and abs(x - 1.51933) <= 1e-4))
    x, m = _argmax_1d(ef["r5"].printed, 0, 1)
    checks.append(("r5", abs(m - 0.0481125) <= 1e-4 and abs(x - 1 / math.sqrt(3)) <= 1e-4))
    y = np.linspace(0, 1, 1001)
    checks.append(("M(0,1,.)", float(np.abs(eval_M(0 * y, 0 * y + 1, y) - 1 / 16).max()) <= 1e-4))
    roots = poly_roots([0, 294912, 0, -460800, 0, 239904, 0, -44816, 0, 1275], (0, 2))
    checks.append(("root", len(roots) == 1 and abs(roots[0] - 1.20623) <= 1e-4))
    bad = [n for n, ok in checks if not ok]
    return not bad, "face/edge constants " + ("all within 1e-4" if not bad else f"off: {', '.join(bad)}")


def criterion_5():
    f2, f3 = extremal_fn(2).coeffs(), extremal_fn(3).coeffs()
    vals = [
        abs(h22(f2).value + 0.25),
        abs(h31(f3).value + 1 / 9),
        abs(fekete_szego(f2, 1).value - 0.5),
        max(abs(f2[k] - e) for k, e in zip(range(2, 6), (0, 0.5, 0, 0.125))),
        max(abs(f3[k] - e) for k, e in zip(range(2, 8), (0, 0, 1 / 3, 0, 0, 1 / 18))),
    ]
    return max(vals) <= 1e-12, f"extremal values and coefficients, max error {max(vals):.1e} (tol 1e-12)"


def criterion_6a():
    om, aa = omega_bounds(), a6_a7_bounds()
    pairs = [(om["omega1"].value, 0.820011), (om["omega2"].value, 0.360465), (om["omega3"].value, 0.606922),
             (aa["a6"].value, 146 / 225), (aa["a7_proof"].value, 1791448 / 2073600)]
    err = max(abs(a - b) for a, b in pairs)
    mismatch = abs(aa["a7_stated"].value - aa["a7_proof"].value) > 1e-6
    return err <= 1e-6 and mismatch, (f"Omega1-3, a6, a7 proof value within {err:.1e} (tol 1e-6); "
                                      "a7 statement/proof mismatch flagged")


def criterion_6b():
    om, aa = omega_bounds(), a6_a7_bounds()
    val = h41_assembly_bound(1 / 3, 907 / 1632, aa["a6"].value, aa["a7_proof"].value, 1 / 9,
                             om["omega1"].value, om["omega2"].value, om["omega3"].value)
    return abs(val - 0.428001) <= 1e-6, f"H41 assembly gives {val:.6f}, published 0.428001 (tol 1e-6)"


def criterion_7():
    rng = np.random.default_rng([SEED, 7])
    A = np.ones((100_000, 7), dtype=complex)
    A[:, 1:] = coeffs_from_p_batch(sample_batch(100_000, 6, rng))
    audit = {"a2": (np.abs(A[:, 1]), 1.0), "a3": (np.abs(A[:, 2]), 0.5), "a4": (np.abs(A[:, 3]), 1 / 3),
             "h22": (np.abs(h22_batch(A)), 0.25), "h31": (np.abs(h31_batch(A)), 1 / 9),
             "h23": (np.abs(h23_batch(A)), 0.146048), "h41": (np.abs(h41_batch(A)), 0.428001)}
    over = [k for k, (v, b) in audit.items() if v.max() > b + 1e-6]
    short = []
    for name in ("a2", "a3", "a4", "h22", "h31"):
        bound = audit[name][1]
        rep = witness_search(name, bound, budget=20000, seed=SEED)
        if rep.best_value < bound - 1e-3:
            short.append(name)
    ok = not over and not short
    return ok, f"audit of 10^5 samples exceeded: {over or 'none'}; witnesses short of bound: {short or 'none'}"


def criterion_8():
    rng = np.random.default_rng([SEED, 8])
    worst = -np.inf
    for row in sample_batch(10_000, 6, rng):
        for c in check_lemma_inequalities(PVector(row, admissible=Verdict.YES)):
            worst = max(worst, c.lhs - c.bound)
    eq = {r.name: r for r in check_lemma_inequalities(PVector([2, 2, 2, 2])) if r.lam is None}
    equality = abs(eq["fourth_order"].lhs - 2) <= 1e-12 and abs(eq["third_order"].lhs - 2) <= 1e-12
    return worst <= 1e-9 and equality, (f"lemma predicates on 10^4 samples, worst lhs - bound {worst:.1e}; "
                                        f"equality at p = (2,2,2,2): {equality}")


def criterion_9():
    cmd = [sys.executable, "-m", "petalstar", "verify", "--seed", "7"]
    env = {**os.environ}
    procs = [subprocess.Popen(cmd + extra, stdout=subprocess.PIPE, env=env)
             for extra in ([], [], ["--jobs", "4"])]
    outs = [p.communicate()[0] for p in procs]
    same = outs[0] == outs[1] == outs[2] and len(outs[0]) > 0
    return same, f"verify --seed 7 JSON byte-identical over 2 runs and 4 threads ({len(outs[0])} bytes)"


CRITERIA = [("1", criterion_1), ("2", criterion_2), ("3", criterion_3), ("4", criterion_4), ("5", criterion_5),
            ("6a", criterion_6a), ("6b", criterion_6b), ("7", criterion_7), ("8", criterion_8), ("9", criterion_9)]
KNOWN_FAILING = {"6b"}


def _case(num, fn):
    marks = []
    if num in KNOWN_FAILING:
        marks.append(pytest.mark.xfail(strict=True, reason="published H4,1 assembly does not reproduce 0.428001"))
    return pytest.param(num, fn, id=f"criterion_{num}", marks=marks)


@pytest.mark.parametrize("num,fn", [_case(n, f) for n, f in CRITERIA])
def test_criterion(num, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, fn in CRITERIA:
        ok, detail = fn()
        results.append(ok)
        print(_line(num, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
