"""
Comparisons between invariants
Filtration differences through H^0, the additivity test over successive
quotients, divergence of the trivial filtration and the two-step check.
"""
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from exactalg.errors import NotSquarefreeError, SearchExhaustedError
from exactalg.monomials import is_finite
from modules.filtration import Filtration, require_dimension_condition, trivial_filtration
from modules.lengths import h0_length, submodule_length
from modules.quotient import QuotientModule, cyclic_presentation
from parameters.system import ParameterSystem, quotient_length

from .cohomology import cohomological_filtration_verdict, gcm_defect, invariant_I_F_cohomological
from .detect import SearchOptions, Witness, evaluate_witness, invariant_I_F, invariant_witness


def invariant_with_route(
    M: QuotientModule,
    F: Filtration,
    options: Optional[SearchOptions] = None,
    sop: Optional[ParameterSystem] = None,
) -> Tuple[int, str]:
    """I_F(M) by the parametric route, falling back to local cohomology"""
    try:
        return invariant_I_F(M, F, options, sop), "parametric"
    except SearchExhaustedError as exhausted:
        try:
            verdict = cohomological_filtration_verdict(M, F)
        except NotSquarefreeError:
            raise exhausted
        if not verdict.is_gcm:
            raise exhausted
        return int(invariant_I_F_cohomological(M, F)), "cohomological"


def module_invariant(N: QuotientModule, options: Optional[SearchOptions] = None) -> Optional[int]:
    """I(N) for the filtration 0 ⊂ N; None when N is not generalized Cohen-Macaulay"""
    if N.is_zero or N.dimension <= 0:
        return 0
    if N.is_squarefree:
        return gcm_defect(N)
    try:
        return invariant_I_F(N, trivial_filtration(N), options)
    except SearchExhaustedError:
        return None


@dataclass
class FiltrationComparison:
    left: int
    right: int
    equal: bool
    invariants: Tuple[int, int]
    routes: Tuple[str, str]
    depth_positive: bool

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def compare_filtrations(
    M: QuotientModule,
    F: Filtration,
    G: Filtration,
    options: Optional[SearchOptions] = None,
) -> FiltrationComparison:
    """
    I_F(M) − I_G(M) against ℓ(H^0_m(M/M_0)) − ℓ(H^0_m(M/N_0)).
    Both filtrations are assumed generalized Cohen-Macaulay. With depth M > 0
    both sides vanish.
    """
    value_f, route_f = invariant_with_route(M, F, options)
    value_g, route_g = invariant_with_route(M, G, options)
    left = value_f - value_g
    right = h0_length(F.quotient(0)) - h0_length(G.quotient(0))
    depth_positive = h0_length(M) == 0
    equal = left == right and (not depth_positive or left == 0)
    return FiltrationComparison(left, right, equal, (value_f, value_g), (route_f, route_g), depth_positive)


@dataclass
class AdditivityCheck:
    """I_F(M) against Σ_i I(M_{i+1}/M_i)"""
    left: Optional[int]
    right: Optional[int]
    representable: bool
    equal: Optional[bool] = None
    bound_holds: Optional[bool] = None
    route: str = ""
    pieces: List[Dict[str, Any]] = field(default_factory=list)
    message: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def check_additivity(
    M: QuotientModule, F: Filtration, options: Optional[SearchOptions] = None
) -> AdditivityCheck:
    """
    Equality holds iff the local cohomology sequences of
    0 → M_i → M_{i+1} → M_{i+1}/M_i → 0 split; the inequality ≤ always holds.
    Each M_{i+1}/M_i must be cyclic per component to be presented.
    """
    require_dimension_condition(F)
    pieces = []
    right: Optional[int] = 0
    for i in range(F.t):
        annihilators = cyclic_presentation(F.steps[i], F.steps[i + 1])
        if annihilators is None:
            return AdditivityCheck(
                None, None, False, pieces=pieces, message=f"M_{i + 1}/M_{i} is not representable"
            )
        piece = QuotientModule(M.ring, annihilators, name=f"M_{i + 1}/M_{i}")
        value = module_invariant(piece, options)
        pieces.append(
            {"step": i, "module": piece.format(), "dim": piece.dimension, "invariant": value}
        )
        if value is None:
            right = None
        elif right is not None:
            right += value

    left, route = invariant_with_route(M, F, options)
    check = AdditivityCheck(left, right, True, route=route, pieces=pieces)
    if right is None:
        check.message = "some successive quotient is not generalized Cohen-Macaulay"
        return check
    check.equal = left == right
    check.bound_holds = left <= right
    check.message = "equality" if check.equal else f"strict inequality {left} < {right}"
    return check


@dataclass
class DivergenceProfile:
    """I_{F',M}(x(m,...,m)) for F' = 0 ⊂ M against its closed form"""
    rows: List[Dict[str, Any]]
    invariant: int
    strictly_increasing: bool
    sop: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(row["equal"] for row in self.rows)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "invariant": self.invariant,
            "strictly_increasing": self.strictly_increasing,
            "consistent": self.consistent,
            "sop": self.sop,
        }


def divergence_profile(
    M: QuotientModule,
    D: Filtration,
    x: Optional[ParameterSystem] = None,
    options: Optional[SearchOptions] = None,
    rounds: int = 3,
) -> DivergenceProfile:
    """
    Along the diagonal the trivial filtration sees
    Σ_{i<t} m^{d_i} e(x_1..x_{d_i}; D_i) + I_D(M), unbounded once t > 1.
    """
    options = options or SearchOptions()
    witness: Witness = evaluate_witness(M, D, x, options) if x is not None else invariant_witness(M, D, options)
    if not witness.constant:
        raise SearchExhaustedError("the supplied system does not certify I_D(M)")
    d = len(witness.sop)
    table = witness.table
    top = table.entries[D.t]
    rows = []
    for m in range(1, rounds + 1):
        n = (m,) * d
        value = quotient_length(M, witness.sop, n) - m**d * top
        closed = sum(m ** max(D.dims[i], 0) * table.entries[i] for i in range(D.t)) + witness.value_low
        rows.append({"m": m, "value": value, "closed_form": closed, "equal": value == closed})
    values = [row["value"] for row in rows]
    increasing = all(a < b for a, b in zip(values, values[1:]))
    return DivergenceProfile(rows, witness.value_low, increasing, witness.sop.format())


@dataclass
class TwoStepCheck:
    length_M0: int
    quotient_invariant: Optional[int]
    split_value: Optional[int]
    formula_value: int
    formula_route: str
    discrepancy: Optional[int]

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def two_step_check(
    M: QuotientModule, F: Filtration, options: Optional[SearchOptions] = None
) -> TwoStepCheck:
    """ℓ(M_0) + I(M/M_0) against the weighted-cohomology value for M_0 ⊂ M"""
    if F.t != 1:
        raise ValueError(f"expected a two-step filtration M_0 ⊂ M, got {F.t + 1} steps")
    require_dimension_condition(F)
    length = submodule_length(M, F.steps[0])
    if not is_finite(length):
        raise ValueError("M_0 must have finite length")
    quotient_value = module_invariant(F.quotient(0), options)
    split = None if quotient_value is None else int(length) + quotient_value
    formula, route = invariant_with_route(M, F, options)
    discrepancy = None if split is None else split - formula
    return TwoStepCheck(int(length), quotient_value, split, formula, route, discrepancy)
