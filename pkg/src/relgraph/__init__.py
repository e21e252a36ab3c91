"""Exact edge-cut spectra, chain calculus and reliability checks for small graphs."""

__version__ = "0.1.0"
