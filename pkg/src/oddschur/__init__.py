"""Odd symmetric functions: skew polynomials, the odd plactic ring, odd Schur
functions, and odd Littlewood-Richardson coefficients with their polytope models."""

from .diagrams import Partition, SkewShape, partition, transpose
from .lr import LRQuery, lr_direct, lr_even, lr_plactic, lr_table, lr_yamanouchi
from .oddsym import SymFunction, expand_in_basis, schur_K
from .opol import SkewPolynomial, divided_difference, complete, elementary
from .plactic import PlacticElement, knuth_normalize, plactic_schur, to_opol
from .polytopes import Hive, Triangle, lr_hive, lr_triangle
from .schur import schur_combinatorial, schur_plactic, schur_symmetrized
from .tableaux import SkewTableau, Tableau

__version__ = "0.1.0"

__all__ = [
    "Hive", "LRQuery", "Partition", "PlacticElement", "SkewPolynomial", "SkewShape",
    "SkewTableau", "SymFunction", "Tableau", "Triangle",
    "complete", "divided_difference", "elementary", "expand_in_basis", "knuth_normalize",
    "lr_direct", "lr_even", "lr_hive", "lr_plactic", "lr_table", "lr_triangle", "lr_yamanouchi",
    "partition", "plactic_schur", "schur_K", "schur_combinatorial", "schur_plactic",
    "schur_symmetrized", "to_opol", "transpose",
]
