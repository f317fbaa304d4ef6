"""Oriented colourings, upper oriented chromatic numbers and graph products.

Exact (exponential) solvers for small graphs, the four standard graph
products, and explicit targets with homomorphisms certifying upper bounds.
"""

from __future__ import annotations

from .canonical import canonical_form, is_isomorphic
from .config import Caps
from .constructions import (
    FactorData,
    StructuredTarget,
    bipartite_hom,
    bipartite_target,
    bipartite_tight_orientation,
    c3_cartesian_path_hom,
    cartesian_upper_hom,
    cartesian_upper_target,
    direct_upper_hom,
    direct_upper_order,
    direct_upper_target,
    lexico_upper_hom,
    lexico_upper_order,
    lexico_upper_target,
    product_hom_compose,
    projection_hom,
    square_coloring,
    strong_upper_hom,
    strong_upper_order,
    strong_upper_target,
    t7_strong_grid_hom,
)
from .errors import (
    AntisymmetryError,
    CapExceededError,
    ConstructionError,
    FormatError,
    InvalidGraphError,
    OrichromError,
)
from .formats import parse_digraph6, parse_graph6, write_digraph6, write_dot, write_graph6
from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    circulant_tournament,
    complete,
    complete_bipartite,
    cycle,
    directed_cycle,
    directed_path,
    empty_graph,
    is_oriented_clique,
    line_digraph,
    orientation_at,
    orientations,
    path,
    square,
    transitive_tournament,
)
from .homomorphism import (
    find_homomorphism,
    find_oriented_coloring,
    verify_homomorphism,
    verify_oriented_coloring,
)
from .products import ProductKind, ProductVertex, layer, product_oriented, product_undirected
from .solvers import (
    CITED_BOUNDS,
    BoundPair,
    chi_o_oriented,
    chi_o_plus,
    chi_o_undirected,
    chromatic_number,
    moon_bounds,
    universal_tournament_size,
)

__version__ = "0.1.0"
