"""Exact-arithmetic toolkit for depth invariants of subgroup pairs and
Hopf-subalgebra pairs."""

__version__ = "0.1.0"
