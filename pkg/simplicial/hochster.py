"""
Local cohomology of Stanley-Reisner rings
Lengths of H^j_m(k[Δ]) from reduced homology of links
"""
from math import comb
from typing import List, Optional, Tuple

from exactalg.errors import NotSquarefreeError
from exactalg.fields import FieldSpec
from exactalg.ideals import Ideal
from exactalg.monomials import INFINITE, Length, is_finite, krull_dimension
from modules.lengths import h0_length
from modules.quotient import QuotientModule

from .complexes import SimplicialComplex, link, stanley_reisner_complex
from .homology import reduced_betti


def complex_local_cohomology_length(delta: SimplicialComplex, j: int, field: FieldSpec) -> Length:
    """
    ℓ(H^j_m(k[Δ])). Finite exactly when H̃_{j-|σ|-1}(lk σ) = 0 for every
    nonempty face σ, and then it equals rank H̃_{j-1}(Δ).
    """
    if j < 0:
        raise ValueError("cohomological degree must be non-negative")
    if delta.is_void:
        return 0
    for sigma in delta.faces:
        if not sigma:
            continue
        if reduced_betti(link(delta, sigma), j - len(sigma) - 1, field):
            return INFINITE
    return reduced_betti(delta, j - 1, field)


def local_cohomology_length(I: Ideal, j: int) -> Length:
    """ℓ(H^j_m(R/I)) for a squarefree monomial ideal I"""
    if not I.is_unit and not I.is_squarefree_monomial:
        raise NotSquarefreeError(
            f"{I.format()} is not a squarefree monomial ideal; use the parametric route"
        )
    if I.is_unit or j > krull_dimension(I):
        return 0
    return complex_local_cohomology_length(stanley_reisner_complex(I), j, I.ring.field)


def is_gcm_cohomological(I: Ideal) -> Tuple[bool, Optional[int]]:
    """
    (True, I(R/I)) when H^j_m(R/I) has finite length for all j < dim,
    with I(R/I) = Σ_j C(d-1, j) ℓ(H^j); (False, None) otherwise.
    """
    d = krull_dimension(I)
    if d <= 0:
        return True, 0
    lengths = [local_cohomology_length(I, j) for j in range(d)]
    if not all(is_finite(x) for x in lengths):
        return False, None
    return True, sum(comb(d - 1, j) * int(x) for j, x in enumerate(lengths))


def module_local_cohomology_length(M: QuotientModule, j: int) -> Length:
    """
    ℓ(H^j_m(M)) summed over components. H^0 is computed by saturation and
    needs no squarefree hypothesis; higher degrees go through Hochster's formula.
    """
    if j == 0:
        return h0_length(M)
    return sum(local_cohomology_length(I, j) for I in M.components)


def module_local_cohomology_lengths(M: QuotientModule, upto: int) -> List[Length]:
    """[ℓ(H^0_m(M)), ..., ℓ(H^{upto-1}_m(M))]"""
    return [module_local_cohomology_length(M, j) for j in range(upto)]


def module_gcm_invariant(M: QuotientModule) -> Optional[int]:
    """Σ_{j<d} C(d-1, j) ℓ(H^j_m(M)) when every term is finite, else None"""
    d = M.dimension
    if d <= 0:
        return 0
    lengths = module_local_cohomology_lengths(M, d)
    if not all(is_finite(x) for x in lengths):
        return None
    return sum(comb(d - 1, j) * int(x) for j, x in enumerate(lengths))
