"""Exact enumeration of Schröder-type objects and the bijections between them.

Submodules:

``numbers``  exact counting formulas and partial Bell polynomials
``paths``    lattice paths, colored Dyck paths, colored compositions, ``xi``
``trees``    Schröder trees, trees with generators, ``psi``
``maps``     dissections, outerplanar maps, ``phi``
``verify``   self-check suites used by the CLI and the tests
"""

from .numbers import (
    IntegralityError,
    bell_large_schroeder,
    bell_little_schroeder,
    bell_transform,
    large_schroeder,
    little_schroeder,
    partial_bell,
    transform_special,
)

__version__ = "0.1.0"

__all__ = [
    "IntegralityError",
    "bell_large_schroeder",
    "bell_little_schroeder",
    "bell_transform",
    "large_schroeder",
    "little_schroeder",
    "partial_bell",
    "transform_special",
]
