"""Closed-form maximisation steps used in the coefficient proofs."""
from __future__ import annotations

from fractions import Fraction


def quad_max(A, B, C):
    """Maximum of A t^2 + B t + C over 0 <= t <= 4 and a maximiser.

    Follows the three-case formula; exact for ``Fraction`` inputs.
    """
    if B <= 0 and A <= -B / 4:
        return C, 0 * A
    if (B >= 0 and A >= -B / 8) or (B <= 0 and A >= -B / 4):
        return 16 * A + 4 * B + C, 4 + 0 * A
    # B > 0 and A <= -B/8 < 0: interior vertex
    return (4 * A * C - B * B) / (4 * A), -B / (2 * A)


def a5_decomposition_bound(quad=quad_max) -> Fraction:
    """|a5| <= (1/8) (8/3 + max_t (11 t/12 - 17 t^2/144)) with t = |p1|^2."""
    best, _ = quad(Fraction(-17, 144), Fraction(11, 12), Fraction(0))
    return Fraction(1, 8) * (Fraction(8, 3) + best)
