"""Exact construction of the grand antiprism from the binary icosahedral group.

All arithmetic is in the golden field Q(√5); nothing here uses floating point
except the convenience values written next to exact ones in exported files.
"""

from .cells import CellCensus, PointSet, cell_census, ga_vertices, vertex_figure
from .dual import dual_cell_of, dual_vertices
from .golden import ONE, SIGMA, SQRT5, TAU, ZERO, GoldenNumber
from .hull import Facet, enumerate_facets
from .icosian import B, C, build_icosian_group, classify_table1, default_group
from .quaternion import E1, E2, E3, GoldenQuaternion, q_mul, q_scalar_product
from .slices import slice_ga
from .symmetry import Isometry, build_standard_groups

__version__ = "0.1.0"

__all__ = [
    "GoldenNumber", "ZERO", "ONE", "TAU", "SIGMA", "SQRT5",
    "GoldenQuaternion", "E1", "E2", "E3", "q_mul", "q_scalar_product",
    "B", "C", "build_icosian_group", "default_group", "classify_table1",
    "Isometry", "build_standard_groups",
    "PointSet", "Facet", "CellCensus", "ga_vertices", "enumerate_facets", "cell_census", "vertex_figure",
    "dual_vertices", "dual_cell_of", "slice_ga",
]
