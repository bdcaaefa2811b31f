"""
Lengths and dimensions of split submodules
All lengths are sums over components; finite length is certified by m^N ⊆ colon
"""
from typing import List

from exactalg.errors import ContainmentError, NotHomogeneousError
from exactalg.ideals import Ideal, ideal_colon, saturation_at_irrelevant
from exactalg.monomials import (
    INFINITE,
    Length,
    contains_power_of_irrelevant,
    hilbert_function_values,
    krull_dimension,
    vector_space_length,
)
from exactalg.rings import total_degree

from .quotient import QuotientModule, Submodule


def submodule_dimension(M: QuotientModule, N: Submodule) -> int:
    """max_k dim R/(I_k : J_k); -1 for the zero submodule"""
    _check_owner(M, N)
    return max(krull_dimension(A) for A in N.annihilators())


def component_subquotient_length(J: Ideal, J_big: Ideal) -> Length:
    """ℓ(J_big/J) for homogeneous J ⊆ J_big"""
    if not J_big.contains_ideal(J):
        raise ContainmentError(f"{J.format()} is not inside {J_big.format()}")
    if J == J_big:
        return 0
    colon = ideal_colon(J, J_big)
    finite, power = contains_power_of_irrelevant(colon)
    if not finite:
        return INFINITE
    if not (J.is_homogeneous and J_big.is_homogeneous):
        raise NotHomogeneousError("subquotient lengths need homogeneous ideals")
    top = power + max(int(total_degree(g)) for g in J_big.generators)
    small = hilbert_function_values(J, top)
    big = hilbert_function_values(J_big, top)
    return sum(a - b for a, b in zip(small, big))


def subquotient_length(M: QuotientModule, N: Submodule, N_big: Submodule) -> Length:
    """ℓ(N_big/N) for N ⊆ N_big"""
    _check_owner(M, N)
    _check_owner(M, N_big)
    total = 0
    for k, (J, J_big) in enumerate(zip(N.ideals, N_big.ideals)):
        if not J_big.contains_ideal(J):
            raise ContainmentError(f"component {k}: {J.format()} is not inside {J_big.format()}")
        total += component_subquotient_length(J, J_big)
    return total


def module_length(M: QuotientModule) -> Length:
    return sum(vector_space_length(I) for I in M.components)


def submodule_length(M: QuotientModule, N: Submodule) -> Length:
    return subquotient_length(M, M.zero(), N)


def h0_ideals(M: QuotientModule) -> List[Ideal]:
    """Component ideals I_k^sat of H^0_m(M)"""
    return [saturation_at_irrelevant(I) for I in M.components]


def h0_length(M: QuotientModule) -> int:
    """ℓ(H^0_m(M)) = Σ ℓ(I_k^sat / I_k)"""
    return sum(
        component_subquotient_length(I, sat) for I, sat in zip(M.components, h0_ideals(M))
    )


def _check_owner(M: QuotientModule, N: Submodule) -> None:
    if N.module is not M and N.module != M:
        raise ContainmentError("submodule belongs to another module")
