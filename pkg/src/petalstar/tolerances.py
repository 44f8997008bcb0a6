"""Numerical tolerances shared across the toolkit.

Everything that compares floats against a threshold reads from here so that
the values can be audited in one place.
"""

# series algebra (ring identities, round trips)
ALGEBRA = 1e-12
# quantities derived through several layers of arithmetic
DERIVED = 1e-9
# |b0| below this makes series division ill-posed
DIV_LEADING = 1e-14
# Toeplitz minimum-eigenvalue band treated as the boundary of P
TOEPLITZ_BAND = 1e-9
# modulus constraints on Caratheodory parameters
PARAM_MODULUS = 1e-12
# lemma predicates on sampled admissible vectors
LEMMA = 1e-9
# sampled bound audits and search reports
BOUND_AUDIT = 1e-6
# membership: |sinh(s - 1)| < 1 + MEMBERSHIP
MEMBERSHIP = 1e-6
# tail estimate above which a truncated series is not trusted on a circle
SERIES_TAIL = 1e-4
# gradient norm below which an interior point counts as critical
CRITICAL_GRADIENT = 1e-6

DEFAULT_ORDER = 12
