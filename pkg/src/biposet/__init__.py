"""Finite binary posets: ordered relation pairs and their order theory.

Structures are pairs of relations on one ground set satisfying chain-form
reflexivity, anti-symmetry, and transitivity. The package covers axiom
checking with least witnesses, constructions, extremal elements,
morphisms, Galois connections, exhaustive small-model enumeration with a
claim registry, and a text/DOT/CLI boundary.
"""

from .axioms import (
    AxiomCheck,
    AxiomVerdict,
    ClassicalVerdict,
    check_axioms,
    check_classical_por,
    validated,
)
from .constructions import (
    divisibility_biposet,
    dual,
    dual_biposet,
    intersect_many,
    powerset_biposet,
)
from .core import (
    BiPoset,
    Check,
    Diamond,
    GroundSet,
    Rel,
    UsageError,
    biposet,
    chain,
    diamond_leq,
)
from .extremal import ExtremalReport, extremal_report, sided_extreme
from .galois import (
    AdjointReport,
    GaloisPair,
    check_adjoint_properties,
    compose_galois,
    example_floor,
    example_identity,
    example_singleton,
    find_adjoint,
    is_galois,
)
from .io_cli import (
    emit_dot,
    main,
    parse_mapping,
    parse_pair,
    parse_structure,
    serialize_mapping,
    serialize_pair,
    serialize_structure,
)
from .morphisms import (
    Mapping,
    find_isomorphism,
    is_isomorphism,
    is_isotone,
    self_dual_witness,
)
from .oracle import (
    CLAIM_DESCRIPTIONS,
    CLAIM_IDS,
    GOLDEN_COUNTS,
    Finding,
    duality_sample,
    enumerate_biposets,
    naive_check_axioms,
    naive_check_classical,
    replay_finding,
    validity_kernel,
    verify_claim,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointReport",
    "AxiomCheck",
    "AxiomVerdict",
    "BiPoset",
    "CLAIM_DESCRIPTIONS",
    "CLAIM_IDS",
    "Check",
    "ClassicalVerdict",
    "Diamond",
    "ExtremalReport",
    "Finding",
    "GOLDEN_COUNTS",
    "GaloisPair",
    "GroundSet",
    "Mapping",
    "Rel",
    "UsageError",
    "biposet",
    "chain",
    "check_adjoint_properties",
    "check_axioms",
    "check_classical_por",
    "compose_galois",
    "diamond_leq",
    "divisibility_biposet",
    "dual",
    "dual_biposet",
    "duality_sample",
    "emit_dot",
    "enumerate_biposets",
    "example_floor",
    "example_identity",
    "example_singleton",
    "extremal_report",
    "find_adjoint",
    "find_isomorphism",
    "intersect_many",
    "is_galois",
    "is_isomorphism",
    "is_isotone",
    "main",
    "naive_check_axioms",
    "naive_check_classical",
    "parse_mapping",
    "parse_pair",
    "parse_structure",
    "powerset_biposet",
    "replay_finding",
    "self_dual_witness",
    "serialize_mapping",
    "serialize_pair",
    "serialize_structure",
    "sided_extreme",
    "validated",
    "validity_kernel",
    "verify_claim",
]
