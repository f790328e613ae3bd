"""Exact algebra: scalars, polynomials, linear algebra and elimination."""

from .field import QuadExt
from .poly import Poly
from .univariate import UniPoly

__all__ = ["Poly", "QuadExt", "UniPoly"]
