"""Wicket-free hypergraph constructions from progression-free sets.

The package builds 3-partite linear 3-uniform hypergraphs whose edges
come from translates of a solution-free set, finds the five-edge
subgraphs (three disjoint "rows" crossed by two disjoint "columns")
that obstruct girth-style properties, removes them by randomized edge
coloring, and checks the small-case classification exhaustively.
"""

from .bounds import (
    CAP_BOUND_BASELINE,
    BoundsReport,
    asymptotic_exponent,
    cap_bound_base,
    concrete_exponent,
    gowers_long_constant,
    improves_cap_bound,
    selection_report,
)
from .census import (
    CensusReport,
    DegreeAudit,
    degree_audit,
    grid_system,
    iter_linear_five_sets,
    minimal_free_example,
    run_census,
    system_has_63,
    system_has_wicket,
)
from .coloring import (
    ColorClassSelection,
    EdgeColoring,
    color_edges,
    colors_needed,
)
from .construction import (
    EisensteinBuild,
    F3Build,
    ModularBuild,
    PlaneWicketFamily,
    build_eisenstein,
    build_f3,
    build_modular,
    build_wickets,
    decode_wicket,
    eisenstein_wicket_system,
    eisenstein_wicket_witness,
    enumerate_plane_wickets,
    modular_wicket_system,
    modular_wicket_witness,
    wicket_dependency_degree,
)
from .eisenstein import (
    EisensteinPoint,
    OMEGA,
    coordinate_norm,
    equilateral_completions,
    is_equilateral,
    region_points,
    ring_norm,
)
from .eqfree import (
    EquationSpec,
    SearchResult,
    equilateral_equation,
    greedy_free_set,
    has_solution,
    is_free,
    iter_nontrivial_solutions,
    load_eisenstein_set_file,
    load_int_set_file,
    max_free_exhaustive,
    max_free_heuristic,
    max_triangle_free,
    modular_equation,
    parse_eisenstein_set_text,
    parse_int_set_text,
    ruzsa_equation,
)
from .errors import (
    CapFileError,
    CapVerificationError,
    ColoringBudgetError,
    DimensionMismatchError,
    DomainTooLargeError,
    HypergraphFileError,
    NonLinearError,
    SetFileError,
    WicketDecodeError,
    WicketlabError,
)
from .gf3 import (
    CapSet,
    all_vectors,
    binary_cap,
    decode,
    encode,
    f3_add,
    f3_neg,
    f3_scale,
    f3_sub,
    find_ap3,
    is_ap3_free,
    lift_cap,
    load_cap_file,
    max_cap_exact,
    parse_cap_text,
    product_cap,
    string_to_vec,
    vec_to_string,
    verify_cap,
    write_cap_file,
)
from .hypergraph import (
    SixThreeWitness,
    TripartiteHypergraph,
    WicketWitness,
    find_63,
    find_wickets,
    load_hypergraph_file,
    parse_hypergraph_text,
    validate_63,
    validate_wicket,
    witness_json,
    write_hypergraph_file,
    write_hypergraph_text,
)

__version__ = "0.1.0"

__all__ = [
    "CAP_BOUND_BASELINE",
    "BoundsReport",
    "CapFileError",
    "CapSet",
    "CapVerificationError",
    "CensusReport",
    "ColorClassSelection",
    "ColoringBudgetError",
    "DegreeAudit",
    "DimensionMismatchError",
    "DomainTooLargeError",
    "EdgeColoring",
    "EisensteinBuild",
    "EisensteinPoint",
    "EquationSpec",
    "F3Build",
    "HypergraphFileError",
    "ModularBuild",
    "NonLinearError",
    "OMEGA",
    "PlaneWicketFamily",
    "SearchResult",
    "SetFileError",
    "SixThreeWitness",
    "TripartiteHypergraph",
    "WicketDecodeError",
    "WicketWitness",
    "WicketlabError",
    "all_vectors",
    "asymptotic_exponent",
    "binary_cap",
    "build_eisenstein",
    "build_f3",
    "build_modular",
    "build_wickets",
    "cap_bound_base",
    "color_edges",
    "colors_needed",
    "concrete_exponent",
    "coordinate_norm",
    "decode",
    "decode_wicket",
    "degree_audit",
    "eisenstein_wicket_system",
    "eisenstein_wicket_witness",
    "encode",
    "enumerate_plane_wickets",
    "equilateral_completions",
    "equilateral_equation",
    "f3_add",
    "f3_neg",
    "f3_scale",
    "f3_sub",
    "find_63",
    "find_ap3",
    "find_wickets",
    "gowers_long_constant",
    "greedy_free_set",
    "grid_system",
    "has_solution",
    "improves_cap_bound",
    "is_ap3_free",
    "is_equilateral",
    "is_free",
    "iter_linear_five_sets",
    "iter_nontrivial_solutions",
    "lift_cap",
    "load_cap_file",
    "load_eisenstein_set_file",
    "load_hypergraph_file",
    "load_int_set_file",
    "max_cap_exact",
    "max_free_exhaustive",
    "max_free_heuristic",
    "max_triangle_free",
    "minimal_free_example",
    "modular_equation",
    "modular_wicket_system",
    "modular_wicket_witness",
    "parse_cap_text",
    "parse_eisenstein_set_text",
    "parse_hypergraph_text",
    "parse_int_set_text",
    "product_cap",
    "region_points",
    "ring_norm",
    "run_census",
    "ruzsa_equation",
    "selection_report",
    "string_to_vec",
    "system_has_63",
    "system_has_wicket",
    "validate_63",
    "validate_wicket",
    "vec_to_string",
    "verify_cap",
    "wicket_dependency_degree",
    "witness_json",
    "write_cap_file",
    "write_hypergraph_file",
    "write_hypergraph_text",
]
