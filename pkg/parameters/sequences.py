"""
d-sequences and dd-sequences
Colon comparisons are made componentwise on M = ⊕ R/I_k
"""
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from exactalg.ideals import colon_by_element, ideal_intersection
from exactalg.rings import Polynomial
from modules.filtration import Filtration
from modules.quotient import QuotientModule

from .system import ParameterSystem


def d_sequence_failure(M: QuotientModule, seq: Sequence[Polynomial]) -> Optional[Tuple[int, int, int]]:
    """
    First (component, i, j), 1-based, where
    (x_1..x_{i-1})M : x_i x_j ≠ (x_1..x_{i-1})M : x_j; None for a d-sequence.
    """
    elements = list(seq)
    for k, I in enumerate(M.components):
        if I.is_unit:
            continue
        for i in range(1, len(elements) + 1):
            base = I.with_generators(elements[: i - 1])
            if base.is_unit:
                break
            for j in range(i, len(elements) + 1):
                xj = elements[j - 1]
                wide = colon_by_element(base, elements[i - 1] * xj)
                narrow = colon_by_element(base, xj)
                if wide != narrow:
                    return k, i, j
    return None


def is_d_sequence(M: QuotientModule, seq: Sequence[Polynomial]) -> bool:
    return d_sequence_failure(M, seq) is None


def dd_sequence_failure(
    M: QuotientModule, x: ParameterSystem, bound: int = 2, progress: bool = False
) -> Optional[Dict[str, object]]:
    """
    First exponent vector n in [1..bound]^s and split point i at which
    (x_1^{n_1}..x_i^{n_i}) fails to be a d-sequence on M/(x_{i+1}^{n_{i+1}}..x_s^{n_s})M.
    """
    s = len(x)
    grid = list(product(range(1, bound + 1), repeat=s))
    for n in tqdm(grid, desc="dd-check", disable=not progress, leave=False):
        powers = x.powers(n)
        for i in range(1, s + 1):
            failure = d_sequence_failure(M.extended(powers[i:]), powers[:i])
            if failure is not None:
                k, a, b = failure
                return {"n": list(n), "split": i, "component": k, "i": a, "j": b}
    return None


def is_dd_sequence(M: QuotientModule, x: ParameterSystem, bound: int = 2, progress: bool = False) -> bool:
    """dd-property checked on exponents 1 ≤ n_j ≤ bound"""
    return dd_sequence_failure(M, x, bound, progress) is None


def check_intersection_equality(
    M: QuotientModule, D: Filtration, x: ParameterSystem, n: Optional[Sequence[int]] = None
) -> List[Dict[str, object]]:
    """
    Per step i < t and component k: xM ∩ D_i = (x_1..x_{d_i})M ∩ D_i, i.e.
    (I_k + (x)) ∩ J_{i,k} == (I_k + (x_1..x_{d_i})) ∩ J_{i,k}.
    """
    powers = x.powers(n)
    rows = []
    for i in range(D.t):
        head = powers[: max(D.dims[i], 0)]
        for k, (I, J) in enumerate(zip(M.components, D.steps[i].ideals)):
            full = ideal_intersection(I.with_generators(powers), J)
            partial = ideal_intersection(I.with_generators(head), J)
            rows.append({"step": i, "component": k, "equal": full == partial})
    return rows
