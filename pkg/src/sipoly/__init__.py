"""Strongly involutive self-dual polyhedra: validation, reduction, expansion and census."""

__version__ = "0.1.0"
