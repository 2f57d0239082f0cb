"""Shattering-extremal set systems: construction, verification, and search.

Families over [n] are bitmask tuples; systems pair antichain supports with
forbidden trace patterns.  The package covers the construction of a family
from a system, the reverse canonical decomposition, the one-set extension
(corner-peeling) step with verified certificates, an inclusion-exclusion
defect, intersection-graph classification, and an exact Groebner-basis
cross-check of extremality.
"""

from .errors import (
    AmbiguousMissing,
    EmptyInput,
    FullFamily,
    GroundMismatch,
    InfiniteStaircase,
    NotAntichain,
    NotComplete,
    NotExtremal,
    ParseError,
    PatternNotInSupport,
    ShatterlabError,
    TooLarge,
    VerificationFailed,
    WitnessNotEligible,
    ZeroPolynomial,
)
from .families import SetFamily, elements_of_mask, is_antichain, mask_from_elements, submasks
from .sperner import Cube, SpernerSystem, decompose, missing_patterns
from .cubes import (
    AntichainExtremalityReport,
    GraphClass,
    IntersectionGraph,
    antichain_extremality,
    classify_graph,
    extremality_defect,
    extremality_defect_by_size,
    indicator,
    intersect_cubes,
    intersect_many,
    intersection_graph,
    is_antichain_extremal,
    recover_anchor,
)
from .elimination import (
    AuditReport,
    EliminationCertificate,
    audit_conjecture,
    augment,
    augment_anchored,
    extend_patterns,
    peel,
    successor_members,
    uncovered_witness,
)
from .groebner import (
    Fp,
    GroebnerReport,
    LexOrder,
    Polynomial,
    all_lex_orders,
    cube_polynomial,
    extremality_groebner_report,
    field_equations,
    format_polynomial,
    integer_matrix_rank,
    is_groebner_basis,
    leading_monomial,
    normal_form,
    point_evaluation_rank,
    s_polynomial,
    standard_monomial_count,
    system_generators,
    to_prime_field,
)
from .sampling import SplitMix64, random_antichain, random_family, random_mask, random_system

__all__ = [name for name in dir() if not name.startswith("_")]
