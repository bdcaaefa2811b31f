"""Stanley-Reisner complexes, reduced homology and Hochster's formula"""
from .complexes import SimplicialComplex, link, stanley_reisner_complex
from .hochster import (
    complex_local_cohomology_length,
    is_gcm_cohomological,
    local_cohomology_length,
    module_gcm_invariant,
    module_local_cohomology_length,
    module_local_cohomology_lengths,
)
from .homology import euler_characteristic, reduced_betti, reduced_homology_ranks

__all__ = [
    "SimplicialComplex",
    "stanley_reisner_complex",
    "link",
    "reduced_homology_ranks",
    "reduced_betti",
    "euler_characteristic",
    "local_cohomology_length",
    "complex_local_cohomology_length",
    "is_gcm_cohomological",
    "module_local_cohomology_length",
    "module_local_cohomology_lengths",
    "module_gcm_invariant",
]
