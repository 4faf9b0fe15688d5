"""Minkowski complexes of polytope families and the convex threshold dimension."""

from .complex import SimplicialComplex, from_facets, join, minimal_nonfaces, reduced_euler
from .exact import LinearProgram, lp_feasible, lp_solve
from .minkowski import discrete_mixed_volume, minkowski_complex, verify_theorem1
from .polytope import LatticePolytope, PolytopeFamily, make_box, make_polytope, sum_contains
from .threshold import ctd_bounds, ctd_lower_bound, ctd_upper_bound, find_forbidden, recognize_threshold

__version__ = "0.1.0"
