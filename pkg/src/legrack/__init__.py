"""Finite racks, Legendrian racks and coloring invariants of Legendrian fronts."""

__version__ = "0.1.0"
