"""Exact computations with chains of module maps over finite-dimensional algebras."""

__version__ = "0.1.0"
