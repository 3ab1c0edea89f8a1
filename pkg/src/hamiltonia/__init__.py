"""Regular graphs with few Hamiltonian cycles: constructions, exact counts,
exhaustive generation and minimum-count surveys."""

from .canon import CanonicalForm, canonical_form, canonical_graph, is_isomorphic
from .constructions import (
    ConstructionSpec,
    build_circulant,
    build_cocktail,
    build_complete,
    build_even_chain,
    build_gnk,
    build_gp,
    build_gstar,
    petersen,
)
from .errors import (
    BadParameters,
    DisconnectedInput,
    EmptyClass,
    HamiltoniaError,
    MalformedHeader,
    NTooLarge,
    SelfLoop,
    TrailingBits,
    UndecidableAtPrecision,
    VertexOutOfRange,
)
from .formulas import (
    ceil_h,
    complete_count,
    eppstein_bound,
    even_chain_count,
    gebauer_bound,
    gebauer_general,
    gstar_count,
    h_formula,
    menage_count,
    singmaster_bound_check,
)
from .generate import GenFilter, generate_regular, generate_regular_bruteforce
from .graph import Graph, degree_sequence, is_connected, is_regular, make_graph, vertex_connectivity
from .graph6 import from_graph6, to_graph6
from .hamcycles import HCCountResult, hc_count, hc_count_oracle, is_hamiltonian
from .survey import (
    ConjectureReport,
    SurveyRecord,
    check_conjecture1,
    check_conjecture2,
    emit_tables,
    run_survey,
    verify_kappa2_hypothesis,
)

__all__ = [
    "BadParameters",
    "CanonicalForm",
    "ConjectureReport",
    "ConstructionSpec",
    "DisconnectedInput",
    "EmptyClass",
    "GenFilter",
    "Graph",
    "HCCountResult",
    "HamiltoniaError",
    "MalformedHeader",
    "NTooLarge",
    "SelfLoop",
    "SurveyRecord",
    "TrailingBits",
    "UndecidableAtPrecision",
    "VertexOutOfRange",
    "build_circulant",
    "build_cocktail",
    "build_complete",
    "build_even_chain",
    "build_gnk",
    "build_gp",
    "build_gstar",
    "canonical_form",
    "canonical_graph",
    "ceil_h",
    "check_conjecture1",
    "check_conjecture2",
    "complete_count",
    "degree_sequence",
    "emit_tables",
    "eppstein_bound",
    "even_chain_count",
    "from_graph6",
    "gebauer_bound",
    "gebauer_general",
    "generate_regular",
    "generate_regular_bruteforce",
    "gstar_count",
    "h_formula",
    "hc_count",
    "hc_count_oracle",
    "is_connected",
    "is_hamiltonian",
    "is_isomorphic",
    "is_regular",
    "make_graph",
    "menage_count",
    "petersen",
    "run_survey",
    "singmaster_bound_check",
    "to_graph6",
    "verify_kappa2_hypothesis",
    "vertex_connectivity",
]

__version__ = "0.1.0"
