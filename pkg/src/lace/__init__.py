"""Exact subdivision operators, symmetric decompositions and real-rootedness certificates."""

from .certificate import Certificate
from .ftriangle import FTriangle
from .poly import Poly, SymDecomp, format_poly, parse_poly

__all__ = ["Certificate", "FTriangle", "Poly", "SymDecomp", "format_poly", "parse_poly"]
