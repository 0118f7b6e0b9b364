"""Exact and asymptotic tools for two-periodic Aztec diamonds."""
__version__ = "0.1.0"
