"""Exact-arithmetic checks for determinants of power-residue sign matrices."""

__version__ = "0.1.0"
