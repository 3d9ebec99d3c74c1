"""Monoids of order-preserving endomorphisms and their equivalent presentations."""

__version__ = "0.1.0"
