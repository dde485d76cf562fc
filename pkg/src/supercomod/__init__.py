"""Exact-arithmetic comodule algebra over small prime fields.

Subpackages build a family of endomorphism super-bialgebras and their
truncated comodule categories, solve comodule-morphism equations, and run
verification suites for the structural theorems the package encodes.
"""

__version__ = "0.1.0"
