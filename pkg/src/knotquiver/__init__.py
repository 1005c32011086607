"""Coloring quivers and polynomial invariants of knots and links.

The pipeline: parse or construct an oriented link diagram, color its
semiarcs by a finite biquandle, decorate the resulting coloring quiver
with integer matrices driven by evaluation vectors, and read off
characteristic and matrix polynomials over edges and maximal paths.
"""

from .algebra import (
    Biquandle,
    alexander_cyclic,
    builtin,
    check_axioms,
    constant_action_biquandle_z2,
    core_cyclic,
    endomorphisms,
    homomorphisms,
    quandle,
    swap3,
    trivial_quandle,
)
from .catalog import catalog_names, get_code, get_diagram, load_catalog
from .cohomology import (
    CoeffGroup,
    boundary_matrices,
    coboundary_generators,
    cocycle_invariant,
    cocycle_invariant_root_form,
    h2_coordinates,
    h2_generators,
    is_coboundary,
    is_cocycle,
    weight_multiset,
)
from .construct import braid_closure, pretzel_link, rational_link
from .diagram import (
    LinkDiagram,
    ValidationError,
    gauss_string,
    mirror,
    parse_gauss,
    parse_pd,
    pd_string,
    r1_kink,
    r2_poke,
    reverse_component,
)
from .homset import chain_vector, colorings, counting_invariant, pair_basis
from .polynomials import (
    GroupExponentPolynomial,
    LimitError,
    char_poly,
    edge_char_polynomial,
    edge_matrix_polynomial,
    maximal_paths,
    path_char_polynomial,
    path_matrix_polynomial,
    specialize,
)
from .quiver import (
    DataVector,
    RepQuiver,
    build_coloring_quiver,
    build_representation,
    quiver_isomorphic,
)

__all__ = [
    "Biquandle",
    "CoeffGroup",
    "DataVector",
    "GroupExponentPolynomial",
    "LimitError",
    "LinkDiagram",
    "RepQuiver",
    "ValidationError",
    "alexander_cyclic",
    "boundary_matrices",
    "braid_closure",
    "build_coloring_quiver",
    "build_representation",
    "builtin",
    "catalog_names",
    "chain_vector",
    "char_poly",
    "check_axioms",
    "coboundary_generators",
    "cocycle_invariant",
    "cocycle_invariant_root_form",
    "colorings",
    "constant_action_biquandle_z2",
    "core_cyclic",
    "counting_invariant",
    "edge_char_polynomial",
    "edge_matrix_polynomial",
    "endomorphisms",
    "gauss_string",
    "get_code",
    "get_diagram",
    "h2_coordinates",
    "h2_generators",
    "homomorphisms",
    "is_coboundary",
    "is_cocycle",
    "load_catalog",
    "maximal_paths",
    "mirror",
    "pair_basis",
    "parse_gauss",
    "parse_pd",
    "path_char_polynomial",
    "path_matrix_polynomial",
    "pd_string",
    "pretzel_link",
    "quandle",
    "quiver_isomorphic",
    "r1_kink",
    "r2_poke",
    "rational_link",
    "reverse_component",
    "specialize",
    "swap3",
    "trivial_quandle",
    "weight_multiset",
]
