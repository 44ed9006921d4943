"""Exact verification of the explicit computations behind quartic double fourfolds."""

from .fields import GF, QQ, gaussian_rationals
from .poly import PolyRing, Polynomial, VariableSet, parse_poly, ring_of

__all__ = ["GF", "QQ", "gaussian_rationals", "PolyRing", "Polynomial", "VariableSet", "parse_poly", "ring_of"]
__version__ = "0.1.0"
