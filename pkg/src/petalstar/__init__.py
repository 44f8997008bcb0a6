"""Coefficient and Hankel-determinant toolkit for the starlike class
S*(rho) = {f : z f'/f subordinate to 1 + asinh(z)}.
"""
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
