"""
Cohomological route
Finite-length tests and invariants from ℓ(H^j_m(M/M_i)) computed through
Stanley-Reisner complexes; H^0 is always available by saturation.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from exactalg.monomials import INFINITE, Length, is_finite
from modules.filtration import Filtration
from modules.lengths import h0_length, submodule_length
from modules.quotient import QuotientModule
from simplicial.hochster import module_gcm_invariant, module_local_cohomology_length

from .binomial import weight


@dataclass
class CohomologyTerm:
    step: int
    degree: int
    length: Length
    weight: int = 0

    def as_dict(self) -> Dict[str, object]:
        return {
            "step": self.step,
            "degree": self.degree,
            "length": "infinite" if not is_finite(self.length) else int(self.length),
            "weight": self.weight,
        }


@dataclass
class CohomologicalVerdict:
    """Finite-length test of H^j_m(M/M_i) for j < d_{i+1}"""
    is_gcm: bool
    terms: List[CohomologyTerm] = field(default_factory=list)
    reason: Optional[str] = None


def quotient_cohomology(M: QuotientModule, F: Filtration, i: int, j: int) -> Length:
    """ℓ(H^j_m(M/M_i))"""
    return module_local_cohomology_length(F.quotient(i), j)


def cohomological_filtration_verdict(M: QuotientModule, F: Filtration) -> CohomologicalVerdict:
    """
    F is generalized Cohen-Macaulay iff ℓ(M_0) < ∞ and every H^j_m(M/M_i),
    i < t, j < d_{i+1}, has finite length. Raises NotSquarefreeError when
    some M/M_i needs more than H^0 and is not squarefree.
    """
    if F.dims[0] > 0 or not is_finite(submodule_length(M, F.steps[0])):
        return CohomologicalVerdict(False, reason="M_0 does not have finite length")
    terms = []
    for i in range(F.t):
        for j in range(1, F.dims[i + 1]):
            length = quotient_cohomology(M, F, i, j)
            terms.append(CohomologyTerm(i, j, length))
            if not is_finite(length):
                return CohomologicalVerdict(
                    False, terms, f"H^{j}_m(M/M_{i}) has infinite length"
                )
    return CohomologicalVerdict(True, terms)


def weighted_terms(M: QuotientModule, F: Filtration) -> List[CohomologyTerm]:
    """Weighted terms c_ij ℓ(H^j_m(M/M_i)) with c_ij = Σ_{k=d_i}^{d_{i+1}-1} C(k-1, j-1)"""
    terms = []
    for i in range(F.t):
        for j in range(1, F.dims[i + 1]):
            c = weight(F.dims[i], F.dims[i + 1], j)
            terms.append(CohomologyTerm(i, j, quotient_cohomology(M, F, i, j), c))
    return terms


def invariant_I_F_cohomological(M: QuotientModule, F: Filtration) -> Length:
    """
    ℓ(H^0_m(M/M_0)) + Σ_{i<t} Σ_{j=1}^{d_{i+1}-1} c_ij ℓ(H^j_m(M/M_i));
    INFINITE when a weighted term has infinite length.
    """
    total: Length = h0_length(F.quotient(0))
    for term in weighted_terms(M, F):
        if not term.weight:
            continue
        if not is_finite(term.length):
            return INFINITE
        total += term.weight * int(term.length)
    return total


def gcm_defect(M: QuotientModule) -> Optional[int]:
    """I(M) = Σ_{j<d} C(d-1, j) ℓ(H^j_m(M)); None when M is not generalized Cohen-Macaulay"""
    return module_gcm_invariant(M)
