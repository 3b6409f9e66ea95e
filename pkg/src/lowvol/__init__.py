"""Rigorous re-derivation of the quantitative steps bounding mod-p homology
of closed hyperbolic 3-manifolds of small volume."""

__version__ = "0.1.0"
