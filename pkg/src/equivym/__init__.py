"""Exact and numerical tools for equivariant Yang-Mills on S^2 x S^2 and
Yang-Mills-Higgs on S^2."""
__version__ = "0.1.0"
