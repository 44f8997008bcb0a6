"""Maximisation machinery behind the coefficient and Hankel bounds."""
from .bounds import a5_decomposition_bound, quad_max
from .cuboid import CuboidResult, InteriorEndpoint, RegionMax, coordinate_ascent, cuboid_max
from .objective import (
    BOX,
    RegionFunction,
    edge_functions,
    eval_M,
    feasibility_window,
    fourier_majorant,
    grad_M,
    h23_majorant,
    interior_critical_feasible,
)
from .roots import poly_roots
from .search import SearchReport, functional_values, witness_search

__all__ = [
    "BOX",
    "CuboidResult",
    "InteriorEndpoint",
    "RegionFunction",
    "RegionMax",
    "SearchReport",
    "a5_decomposition_bound",
    "coordinate_ascent",
    "cuboid_max",
    "edge_functions",
    "eval_M",
    "feasibility_window",
    "fourier_majorant",
    "functional_values",
    "grad_M",
    "h23_majorant",
    "interior_critical_feasible",
    "poly_roots",
    "quad_max",
    "witness_search",
]
