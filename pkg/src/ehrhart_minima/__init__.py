"""Exact Ehrhart polynomials, their roots, and successive minima of lattice polytopes."""
from .ehrhart import EhrhartPolynomial, RootSet, ehrhart_polynomial, roots
from .geometry import LatticePolytope, count_lattice_points, hull, normalized_surface, volume
from .minima import MinimaProfile, successive_minima

__version__ = "0.1.0"

__all__ = [
    "EhrhartPolynomial", "LatticePolytope", "MinimaProfile", "RootSet", "count_lattice_points",
    "ehrhart_polynomial", "hull", "normalized_surface", "roots", "successive_minima", "volume",
]
