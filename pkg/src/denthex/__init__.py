"""Exact lozenge-tiling counts for hexagons with dents on their boundary.

Modules:

- ``lattice``: triangular-lattice cells, dented hexagons, forced lozenges,
  symmetries and the classifier for regions with closed-form counts.
- ``exactmath``: rational Pochhammer symbols, MacMahon's box formula,
  Pfaffians and terminating hypergeometric series with their identities.
- ``oracle``: brute-force tiling counts used as ground truth.
- ``formulas``: closed forms for two-dent hexagons, trapezoids and notches.
- ``condensation``: the Pfaffian theorems and Kuo's condensation identities.
- ``cli``: the ``denthex`` command line.
"""

from .condensation import theorem1_count, theorem2_count, theorem3_count
from .exactmath import macmahon, pfaffian
from .lattice import DentSpec, HexDentSpec, Side, build_hexagon
from .oracle import count_tilings

__version__ = "0.1.0"

__all__ = [
    "DentSpec",
    "HexDentSpec",
    "Side",
    "build_hexagon",
    "count_tilings",
    "macmahon",
    "pfaffian",
    "theorem1_count",
    "theorem2_count",
    "theorem3_count",
]
