"""Syzygies, Jacobian modules and Bourbaki ideals of reduced plane curves."""

from .poly import Poly, parse_poly, PolySyntaxError, X, Y, Z

__version__ = "0.1.0"
