"""Generalized Cohen-Macaulay filtrations, detectors and the invariant I_F(M)"""
from .binomial import binom, start_dimension, weight
from .cohomology import (
    CohomologicalVerdict,
    CohomologyTerm,
    cohomological_filtration_verdict,
    gcm_defect,
    invariant_I_F_cohomological,
    quotient_cohomology,
    weighted_terms,
)
from .detect import (
    UNAVAILABLE,
    FiltrationCheck,
    SearchOptions,
    SeqCmVerdict,
    SeqGcmVerdict,
    Witness,
    check_gcm_filtration,
    check_seq_cm,
    evaluate_witness,
    invariant_I_F,
    invariant_witness,
    is_seq_gcm,
    search_witness,
    vanishing_table,
)
from .invariants import (
    AdditivityCheck,
    DivergenceProfile,
    FiltrationComparison,
    TwoStepCheck,
    check_additivity,
    compare_filtrations,
    divergence_profile,
    invariant_with_route,
    module_invariant,
    two_step_check,
)

__all__ = [
    "binom",
    "start_dimension",
    "weight",
    "CohomologyTerm",
    "CohomologicalVerdict",
    "quotient_cohomology",
    "cohomological_filtration_verdict",
    "weighted_terms",
    "invariant_I_F_cohomological",
    "gcm_defect",
    "UNAVAILABLE",
    "SearchOptions",
    "Witness",
    "evaluate_witness",
    "search_witness",
    "invariant_witness",
    "SeqGcmVerdict",
    "is_seq_gcm",
    "FiltrationCheck",
    "check_gcm_filtration",
    "invariant_I_F",
    "SeqCmVerdict",
    "vanishing_table",
    "check_seq_cm",
    "invariant_with_route",
    "module_invariant",
    "FiltrationComparison",
    "compare_filtrations",
    "AdditivityCheck",
    "check_additivity",
    "DivergenceProfile",
    "divergence_profile",
    "TwoStepCheck",
    "two_step_check",
]
