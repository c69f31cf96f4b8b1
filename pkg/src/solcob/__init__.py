"""Exact invariants of Sol and dihedral 3-manifolds and the |H1| = 16 cobordism classification."""

__version__ = "0.1.0"
