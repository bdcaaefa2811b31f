"""
Detectors for sequentially generalized Cohen-Macaulay modules

Parametric route: a good system x with I_{F,M}(x) = I_{F,M}(x_1^2, ..., x_d^2)
certifies the property. Cohomological route: finite local cohomology of the
quotients M/D_i. A negative answer is only ever proven by the second route;
search failure is reported as undecided.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Union

from exactalg.errors import (
    MultiplicityNotStabilizedError,
    NotSquarefreeError,
    NotSystemOfParametersError,
    SearchExhaustedError,
)
from exactalg.ideals import Ideal
from exactalg.monomials import is_finite
from modules.filtration import Filtration, dimension_filtration, require_dimension_condition
from modules.lengths import h0_length, subquotient_length
from modules.quotient import QuotientModule
from parameters.multiplicity import MultiplicityTable, is_standard_witness, multiplicity_table
from parameters.search import MAX_TRIES, find_good_sop
from parameters.system import ParameterSystem, is_good_sop, is_sop

from .cohomology import (
    CohomologicalVerdict,
    cohomological_filtration_verdict,
    invariant_I_F_cohomological,
    quotient_cohomology,
)

UNAVAILABLE = "unavailable (non-squarefree)"

Decompositions = Optional[Sequence[Optional[Sequence[Ideal]]]]


@dataclass
class SearchOptions:
    """Knobs shared by every parametric computation"""
    seed: int = 0
    budget: int = 8
    max_tries: int = MAX_TRIES
    base: int = 2
    threads: int = 1
    progress: bool = False


@dataclass
class Witness:
    """A good system of parameters together with its finite-criterion values"""
    sop: ParameterSystem
    table: MultiplicityTable
    value_low: int
    value_high: int
    seed: Optional[int] = None

    @property
    def constant(self) -> bool:
        return self.value_low == self.value_high


@dataclass
class SearchLog:
    budget: int
    attempts: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def seeds_tried(self) -> List[int]:
        return [a["seed"] for a in self.attempts if a.get("seed") is not None]


def evaluate_witness(
    M: QuotientModule, F: Filtration, x: ParameterSystem, options: SearchOptions
) -> Witness:
    """Finite-criterion values of a given system; it must be a good sop"""
    if not is_sop(M, x):
        raise NotSystemOfParametersError()
    if not is_good_sop(M, F, x):
        raise NotSystemOfParametersError("not a good system of parameters for the filtration")
    table = multiplicity_table(M, F, x, base=options.base, threads=options.threads)
    _, low, high = is_standard_witness(M, F, x, table)
    return Witness(x, table, low, high)


def search_witness(
    M: QuotientModule, F: Filtration, options: SearchOptions
) -> Union[Witness, SearchLog]:
    """
    Draw good systems for seeds seed, seed+1, ... until one passes the finite
    criterion. The second half of the budget also allows degree-2 elements.
    """
    log = SearchLog(options.budget)
    for attempt in range(options.budget):
        seed = options.seed + attempt
        degree = 1 if attempt < max(1, options.budget // 2) else 2
        try:
            x = find_good_sop(M, F, seed, options.max_tries, degree, options.progress)
            table = multiplicity_table(M, F, x, base=options.base, threads=options.threads)
        except SearchExhaustedError as exc:
            log.attempts.append({"seed": seed, "outcome": "no good sop", "detail": exc.progress})
            continue
        except MultiplicityNotStabilizedError as exc:
            log.attempts.append({"seed": seed, "outcome": "multiplicity not stabilized", "detail": str(exc)})
            continue
        ok, low, high = is_standard_witness(M, F, x, table)
        if ok:
            return Witness(x, table, low, high, seed)
        log.attempts.append({"seed": seed, "outcome": "not constant", "detail": [low, high]})
    return log


@dataclass
class SeqGcmVerdict:
    is_seq_gcm: Optional[bool]
    route: str
    witness_filtration: Filtration
    witness_sop: Optional[ParameterSystem] = None
    invariant_parametric: Optional[int] = None
    invariant_cohomological: Union[int, str, None] = None
    agreement: Optional[bool] = None
    cohomological: Optional[CohomologicalVerdict] = None
    search: Optional[SearchLog] = None
    message: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {
            "is_seq_gcm": self.is_seq_gcm,
            "route": self.route,
            "message": self.message,
            "witness_filtration": self.witness_filtration.format(),
            "filtration_dims": list(self.witness_filtration.dims),
            "witness_sop": self.witness_sop.format() if self.witness_sop is not None else None,
            "invariant_parametric": self.invariant_parametric,
            "invariant_cohomological": self.invariant_cohomological,
            "agreement": self.agreement,
            "cohomology": [t.as_dict() for t in self.cohomological.terms] if self.cohomological else None,
            "seeds_tried": self.search.seeds_tried if self.search else [],
            "search_budget": self.search.budget if self.search else None,
        }


def _try_cohomological(M: QuotientModule, F: Filtration) -> Optional[CohomologicalVerdict]:
    try:
        return cohomological_filtration_verdict(M, F)
    except NotSquarefreeError:
        return None


def is_seq_gcm(
    M: QuotientModule,
    decompositions: Decompositions = None,
    options: Optional[SearchOptions] = None,
    sop: Optional[ParameterSystem] = None,
    D: Optional[Filtration] = None,
) -> SeqGcmVerdict:
    options = options or SearchOptions()
    D = D or dimension_filtration(M, decompositions)

    if M.dimension <= 0:
        empty = ParameterSystem(M.ring, ())
        return SeqGcmVerdict(
            True, "finite length", D, empty, 0, 0, True, message="module of finite length"
        )

    cohom = _try_cohomological(M, D)
    if cohom is not None and not cohom.is_gcm:
        return SeqGcmVerdict(
            False,
            "cohomological",
            D,
            cohomological=cohom,
            message=f"dimension filtration is not generalized Cohen-Macaulay: {cohom.reason}",
        )
    invariant_cohom: Union[int, str] = UNAVAILABLE
    if cohom is not None:
        invariant_cohom = int(invariant_I_F_cohomological(M, D))

    witness: Optional[Witness] = None
    log: Optional[SearchLog] = None
    if sop is not None:
        candidate = evaluate_witness(M, D, sop, options)
        if candidate.constant:
            witness = candidate
    if witness is None:
        found = search_witness(M, D, options)
        if isinstance(found, Witness):
            witness = found
        else:
            log = found

    verdict = SeqGcmVerdict(
        None,
        "none",
        D,
        invariant_cohomological=invariant_cohom,
        cohomological=cohom,
        search=log,
    )
    if witness is not None:
        verdict.is_seq_gcm = True
        verdict.route = "parametric"
        verdict.witness_sop = witness.sop
        verdict.invariant_parametric = witness.value_low
        verdict.message = "finite criterion holds for a good system of parameters"
    elif cohom is not None:
        verdict.is_seq_gcm = True
        verdict.route = "cohomological"
        verdict.message = f"no parametric witness found (budget {options.budget}); local cohomology is finite"
    elif M.dimension <= 2:
        # every module of dimension at most 2 is sequentially generalized Cohen-Macaulay
        verdict.is_seq_gcm = True
        verdict.route = "dimension ≤ 2"
        verdict.message = f"no parametric witness found (budget {options.budget}); dim M = {M.dimension} ≤ 2"
    else:
        verdict.message = f"no witness found (budget {options.budget})"
    if isinstance(invariant_cohom, int) and verdict.invariant_parametric is not None:
        verdict.agreement = invariant_cohom == verdict.invariant_parametric
    return verdict


@dataclass
class FiltrationCheck:
    verdict: Optional[bool]
    route: str
    reason: str = ""
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        return {"verdict": self.verdict, "route": self.route, "reason": self.reason, "rows": self.rows}


def _drop_finite_steps(F: Filtration) -> Filtration:
    """M_0 ⊂ M_1 ⊂ ... with ℓ(M_1) < ∞ is gCM iff M_1 ⊂ M_2 ⊂ ... is"""
    while F.t >= 1 and F.dims[1] <= 0:
        F = Filtration(F.module, F.steps[1:], F.dims[1:], F.name)
    return F


def check_gcm_filtration(
    M: QuotientModule,
    F: Filtration,
    decompositions: Decompositions = None,
    options: Optional[SearchOptions] = None,
    D: Optional[Filtration] = None,
) -> FiltrationCheck:
    """
    Whether every M_{i+1}/M_i is generalized Cohen-Macaulay with dim M_0 ≤ 0.
    Squarefree quotients are decided by local cohomology; otherwise F is
    compared with the dimension filtration once M itself is known to be
    sequentially generalized Cohen-Macaulay.
    """
    require_dimension_condition(F)
    if F.dims[0] > 0:
        return FiltrationCheck(False, "definition", "dim M_0 > 0")

    cohom = _try_cohomological(M, F)
    if cohom is not None:
        return FiltrationCheck(
            cohom.is_gcm,
            "cohomological",
            cohom.reason or "all H^j_m(M/M_i) with j < d_{i+1} have finite length",
            [t.as_dict() for t in cohom.terms],
        )

    F = _drop_finite_steps(F)
    if F.t == 0:
        return FiltrationCheck(True, "definition", "module of finite length")

    D = D or dimension_filtration(M, decompositions)
    module_verdict = is_seq_gcm(M, decompositions, options, D=D)
    if module_verdict.is_seq_gcm is None:
        return FiltrationCheck(None, "undecidable", "undecidable by this route: " + module_verdict.message)
    if module_verdict.is_seq_gcm is False:
        return FiltrationCheck(False, "dimension filtration", module_verdict.message)

    if F.t != D.t:
        return FiltrationCheck(
            False, "dimension-filtration comparison", f"length {F.t} differs from {D.t}"
        )
    rows = []
    for i in range(F.t):
        contained = F.steps[i] <= D.steps[i]
        length = subquotient_length(M, F.steps[i], D.steps[i]) if contained else None
        finite = contained and is_finite(length)
        rows.append(
            {
                "step": i,
                "contained": contained,
                "length": None if length is None else ("infinite" if not is_finite(length) else int(length)),
            }
        )
        if not finite:
            return FiltrationCheck(
                False, "dimension-filtration comparison", f"ℓ(D_{i}/M_{i}) is not finite", rows
            )
    return FiltrationCheck(True, "dimension-filtration comparison", "ℓ(D_i/M_i) < ∞ for i < t", rows)


def invariant_witness(
    M: QuotientModule,
    F: Filtration,
    options: Optional[SearchOptions] = None,
    sop: Optional[ParameterSystem] = None,
) -> Witness:
    """A good system for F whose I_{F,M} is constant, supplied or searched"""
    options = options or SearchOptions()
    if M.dimension <= 0:
        x = ParameterSystem(M.ring, ())
        return evaluate_witness(M, F, x, options)
    if sop is not None:
        candidate = evaluate_witness(M, F, sop, options)
        if candidate.constant:
            return candidate
    found = search_witness(M, F, options)
    if isinstance(found, Witness):
        return found
    raise SearchExhaustedError(
        f"no witness found (budget {options.budget})", progress={"attempts": found.attempts}
    )


def invariant_I_F(
    M: QuotientModule,
    F: Filtration,
    options: Optional[SearchOptions] = None,
    sop: Optional[ParameterSystem] = None,
) -> int:
    """The stable value of I_{F,M}(x(n)) certified by the finite criterion"""
    return invariant_witness(M, F, options, sop).value_low


@dataclass
class SeqCmVerdict:
    is_seq_cm: Optional[bool]
    invariant: Optional[int]
    route: str
    vanishing: Optional[List[Dict[str, Any]]] = None
    cohomological_agrees: Optional[bool] = None

    def as_dict(self) -> Dict[str, Any]:
        return {
            "is_seq_cm": self.is_seq_cm,
            "invariant": self.invariant,
            "route": self.route,
            "vanishing": self.vanishing,
            "cohomological_agrees": self.cohomological_agrees,
        }


def vanishing_table(M: QuotientModule, D: Filtration) -> Optional[List[Dict[str, Any]]]:
    """H^j_m(M/D_{i-1}) for i = 1..t and j < dim D_i; None when not squarefree"""
    rows = []
    try:
        for i in range(1, D.t + 1):
            for j in range(D.dims[i]):
                if j == 0:
                    length = h0_length(D.quotient(i - 1))
                else:
                    length = quotient_cohomology(M, D, i - 1, j)
                rows.append(
                    {
                        "step": i - 1,
                        "degree": j,
                        "length": "infinite" if not is_finite(length) else int(length),
                        "vanishes": is_finite(length) and length == 0,
                    }
                )
    except NotSquarefreeError:
        return None
    return rows


def check_seq_cm(
    M: QuotientModule,
    decompositions: Decompositions = None,
    options: Optional[SearchOptions] = None,
    sop: Optional[ParameterSystem] = None,
) -> SeqCmVerdict:
    """M is sequentially Cohen-Macaulay iff I_D(M) = 0"""
    verdict = is_seq_gcm(M, decompositions, options, sop)
    table = vanishing_table(M, verdict.witness_filtration)
    cohomological = None if table is None else all(row["vanishes"] for row in table)

    if verdict.is_seq_gcm is False:
        agrees = None if cohomological is None else not cohomological
        return SeqCmVerdict(False, None, verdict.route, table, agrees)
    if verdict.invariant_parametric is not None:
        invariant = verdict.invariant_parametric
        route = "parametric"
    elif isinstance(verdict.invariant_cohomological, int):
        invariant = verdict.invariant_cohomological
        route = "cohomological"
    else:
        return SeqCmVerdict(cohomological, None, "cohomological" if table is not None else "none", table)
    answer = invariant == 0
    agrees = None if cohomological is None else cohomological == answer
    return SeqCmVerdict(answer, invariant, route, table, agrees)
