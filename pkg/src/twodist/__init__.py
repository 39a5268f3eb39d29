"""Exact 2-distance colouring tools for sparse plane graphs.

Modules: ``graph`` (rotation systems, faces, girth), ``coloring`` (square
graph, exact chi_2, bound certification), ``classify`` (light/heavy
classification and configuration detectors), ``recolor`` (constructive
extension through light vertices), ``discharge`` (exact-rational discharging),
``generators``, ``corpus`` and ``cli``.
"""

from .classify import ClassificationTable, ClassParams, classify, detect_configurations
from .coloring import PartialColoring, chi2_exact, feasible_coloring, square_graph, verify_bound
from .discharge import apply_rules, final_report, initial_charges, poor_vertices
from .generators import from_spec
from .graph import EmbeddedPlanarGraph, GraphError, girth, parse_graph, trace_faces
from .recolor import extend_one, heavy_first_driver

__version__ = "0.1.0"
