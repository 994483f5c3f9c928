"""Exact homology of abelian classifying spaces, toral/atoral splittings,
curvature-status rules for geometric generators, and Toda-bracket bounds."""

__version__ = "0.1.0"
