"""Skew polynomial rings, Petit algebras and their automorphisms."""

__version__ = "0.1.0"
