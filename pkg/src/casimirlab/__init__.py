"""Exact computations around Vogel universality for simple Lie algebras."""

from .casimir import AlgebraId, CasimirValue
from .composite import CompositePair

__version__ = "0.1.0"

__all__ = ["AlgebraId", "CasimirValue", "CompositePair", "__version__"]
