"""
Hilbert-Samuel function with respect to a parameter ideal
Values ℓ(M/q^{n+1}M), the coefficients e_0..e_d of
ℓ(M/q^{n+1}M) = Σ_i C(n+i, i) e_{d-i}, and their expressions through
multiplicities of filtration steps and local cohomology lengths.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from exactalg.errors import NotSquarefreeError, NotSystemOfParametersError
from exactalg.ideals import ideal_power
from exactalg.monomials import is_finite, vector_space_length
from exactalg.parallel import parallel_map
from modules.filtration import Filtration, require_dimension_condition
from modules.lengths import h0_length
from modules.quotient import QuotientModule
from parameters.multiplicity import BASE_POINT, MultiplicityTable, multiplicity, multiplicity_table
from parameters.sequences import is_dd_sequence
from parameters.system import ParameterSystem, is_sop
from seqcm.binomial import binom, start_dimension
from seqcm.cohomology import quotient_cohomology
from simplicial.hochster import module_local_cohomology_length

EXTRA_POINTS = 3
UNAVAILABLE = "unavailable"


def hs_function(M: QuotientModule, x: ParameterSystem, n: int) -> int:
    """ℓ(M/q^{n+1}M) for q = (x_1, ..., x_d)"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    power = ideal_power(M.ring, x.elements, n + 1)
    total = 0
    for I in M.components:
        length = vector_space_length(I + power)
        if not is_finite(length):
            raise NotSystemOfParametersError(f"{x.format()} does not generate a parameter ideal of M")
        total += int(length)
    return total


def hs_values(
    M: QuotientModule, x: ParameterSystem, upto: int, threads: int = 1, progress: bool = False
) -> Dict[int, int]:
    """ℓ(M/q^{n+1}M) for n = 0..upto"""
    return parallel_map(lambda n: hs_function(M, x, n), range(upto + 1), threads, progress, "hilbert-samuel")


@dataclass
class HilbertSamuelRecord:
    q_generators: ParameterSystem
    values: Dict[int, int]
    coefficients: List[Fraction]
    fit_exact: bool
    failed_at: Optional[int] = None
    dd_certified: Optional[bool] = None

    @property
    def dimension(self) -> int:
        return len(self.coefficients) - 1

    def e(self, i: int) -> Fraction:
        return self.coefficients[i]

    def predicted(self, n: int) -> Fraction:
        d = self.dimension
        return sum((binom(n + i, i) * self.coefficients[d - i] for i in range(d + 1)), Fraction(0))

    def as_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q_generators.format(),
            "values": {str(n): v for n, v in sorted(self.values.items())},
            "coefficients": [int(c) if c.denominator == 1 else str(c) for c in self.coefficients],
            "fit_exact": self.fit_exact,
            "failed_at": self.failed_at,
            "dd_certified": self.dd_certified,
        }


def hs_coefficients(
    M: QuotientModule,
    x: ParameterSystem,
    extra: int = EXTRA_POINTS,
    dd_bound: Optional[int] = 2,
    threads: int = 1,
    progress: bool = False,
) -> HilbertSamuelRecord:
    """
    Solve for e_0..e_d from n = 0..d and check n = d+1..d+extra. A failed
    check means the dd hypothesis breaks beyond the tested bound; `dd_bound`
    None skips the dd certificate.
    """
    if not is_sop(M, x):
        raise NotSystemOfParametersError()
    d = len(x)
    values = hs_values(M, x, d + extra, threads, progress)

    rows = [[QQ(binom(n + i, i)) for i in range(d + 1)] for n in range(d + 1)]
    rhs = [[QQ(values[n])] for n in range(d + 1)]
    A = DomainMatrix(rows, (d + 1, d + 1), QQ)
    b = DomainMatrix(rhs, (d + 1, 1), QQ)
    solution = A.lu_solve(b).to_Matrix()
    # solution[i] is e_{d-i}
    coefficients = [
        Fraction(int(solution[d - k, 0].p), int(solution[d - k, 0].q)) for k in range(d + 1)
    ]

    record = HilbertSamuelRecord(x, values, coefficients, True)
    for n in range(d + 1, d + extra + 1):
        if record.predicted(n) != values[n]:
            record.fit_exact = False
            record.failed_at = n
            break
    if any(c.denominator != 1 for c in coefficients):
        record.fit_exact = False
    if dd_bound is not None:
        record.dd_certified = is_dd_sequence(M, x, dd_bound, progress)
    return record


@dataclass
class IdentityCheck:
    identity: str
    lhs: int
    rhs: Union[int, str]
    passed: Optional[bool]

    def as_dict(self) -> Dict[str, Any]:
        return {"identity": self.identity, "lhs": self.lhs, "rhs": self.rhs, "passed": self.passed}


@dataclass
class HilbertSamuelVerification:
    record: HilbertSamuelRecord
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.record.fit_exact and all(c.passed for c in self.checks)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "record": self.record.as_dict(),
            "checks": [c.as_dict() for c in self.checks],
            "all_passed": self.all_passed,
        }


def _weighted_cohomology(M: QuotientModule, F: Filtration, k: int, i: int) -> int:
    """Σ_{j=1}^{i} C(i-1, j-1) ℓ(H^j_m(M/M_k)); raises when some term is infinite"""
    total = 0
    for j in range(1, i + 1):
        length = quotient_cohomology(M, F, k, j)
        if not is_finite(length):
            raise ValueError(f"H^{j}_m(M/M_{k}) has infinite length")
        total += binom(i - 1, j - 1) * int(length)
    return total


def _check(identity: str, lhs: Fraction, compute) -> IdentityCheck:
    try:
        rhs = compute()
    except NotSquarefreeError:
        return IdentityCheck(identity, int(lhs), UNAVAILABLE, None)
    except ValueError:
        return IdentityCheck(identity, int(lhs), "infinite", False)
    return IdentityCheck(identity, int(lhs), rhs, lhs == rhs)


def verify_hs_identities(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    record: Optional[HilbertSamuelRecord] = None,
    table: Optional[MultiplicityTable] = None,
    base: int = BASE_POINT,
    threads: int = 1,
) -> HilbertSamuelVerification:
    """
    Per-identity comparison of the fitted coefficients with
      e_d = ℓ(H^0_m(M)),
      e_{d-d_k} = e(x_1..x_{d_k}; M_k) + Σ_{j=1}^{d_k} C(d_k-1, j-1) ℓ(H^j_m(M/M_k)),
      e_{d-i} = Σ_{j=1}^{i} C(i-1, j-1) ℓ(H^j_m(M/M_k)) for d_k < i < d_{k+1}.
    """
    require_dimension_condition(F)
    record = record or hs_coefficients(M, x, threads=threads)
    table = table or multiplicity_table(M, F, x, base=base, threads=threads)
    d = record.dimension
    e = record.coefficients
    result = HilbertSamuelVerification(record)

    result.checks.append(IdentityCheck(f"e_{d} = l(H^0(M))", int(e[d]), h0_length(M), e[d] == h0_length(M)))
    for k in range(1, F.t + 1):
        dk = F.dims[k]
        if dk <= 0:
            continue
        result.checks.append(
            _check(
                f"e_{d - dk} = e(x_1..x_{dk}; M_{k}) + cohomology of M/M_{k}",
                e[d - dk],
                lambda k=k, dk=dk: table.entries[k] + _weighted_cohomology(M, F, k, dk),
            )
        )
    for k in range(F.t):
        for i in range(start_dimension(F.dims[k]) + 1, F.dims[k + 1]):
            result.checks.append(
                _check(
                    f"e_{d - i} = cohomology of M/M_{k} in degrees 1..{i}",
                    e[d - i],
                    lambda k=k, i=i: _weighted_cohomology(M, F, k, i),
                )
            )
    return result


def I_n(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    n: int,
    table: Optional[MultiplicityTable] = None,
) -> int:
    """ℓ(M/q^{n+1}M) − Σ_{k=1}^{t} C(n+d_k, d_k) e(x_1..x_{d_k}; M_k)"""
    table = table or multiplicity_table(M, F, x)
    correction = sum(
        binom(n + F.dims[k], F.dims[k]) * table.entries[k] for k in range(1, F.t + 1) if F.dims[k] >= 0
    )
    return hs_function(M, x, n) - correction


def I_n_cohomological(M: QuotientModule, D: Filtration, n: int) -> int:
    """
    Σ_{k<t} Σ_{i=d_k}^{d_{k+1}-1} C(n+i, i) Σ_{j=1}^{i} C(i-1, j-1) ℓ(H^j_m(M/D_k)) + ℓ(H^0_m(M))
    """
    total = h0_length(M)
    for k in range(D.t):
        for i in range(max(start_dimension(D.dims[k]), 1), D.dims[k + 1]):
            total += binom(n + i, i) * _weighted_cohomology(M, D, k, i)
    return total


@dataclass
class InvarianceReport:
    rows: List[Dict[str, Any]]

    @property
    def all_equal(self) -> bool:
        return all(row["equal"] for row in self.rows)

    def as_dict(self) -> Dict[str, Any]:
        return {"rows": self.rows, "all_equal": self.all_equal}


def I_n_invariance(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    G: Filtration,
    y: ParameterSystem,
    upto: int = 3,
    D: Optional[Filtration] = None,
) -> InvarianceReport:
    """I_n(M) for n = 0..upto computed from (F, x) and from (G, y); optionally the closed form on D"""
    table_x = multiplicity_table(M, F, x)
    table_y = multiplicity_table(M, G, y)
    rows = []
    for n in range(upto + 1):
        first = I_n(M, F, x, n, table_x)
        second = I_n(M, G, y, n, table_y)
        row: Dict[str, Any] = {"n": n, "first": first, "second": second}
        equal = first == second
        if D is not None:
            try:
                closed = I_n_cohomological(M, D, n)
                row["closed_form"] = closed
                equal = equal and closed == first
            except NotSquarefreeError:
                row["closed_form"] = UNAVAILABLE
        row["equal"] = equal
        rows.append(row)
    return InvarianceReport(rows)


def gcm_hs_closed_form(M: QuotientModule, x: ParameterSystem, n: int, e_x: Optional[int] = None) -> int:
    """
    C(n+d, d) e(x; M) + Σ_{i=1}^{d-1} C(n+i, i) Σ_j C(i-1, j-1) ℓ(H^j_m(M)) + ℓ(H^0_m(M))
    for a generalized Cohen-Macaulay M and a dd-sequence x
    """
    d = len(x)
    if e_x is None:
        e_x = multiplicity(M, M.whole(), x)
    total = binom(n + d, d) * e_x + h0_length(M)
    lengths = {j: module_local_cohomology_length(M, j) for j in range(1, d)}
    for i in range(1, d):
        inner = 0
        for j in range(1, i + 1):
            if not is_finite(lengths[j]):
                raise ValueError(f"H^{j}_m(M) has infinite length")
            inner += binom(i - 1, j - 1) * int(lengths[j])
        total += binom(n + i, i) * inner
    return total


def compare_gcm_closed_form(M: QuotientModule, x: ParameterSystem, upto: int = 3) -> List[Dict[str, Any]]:
    """gcm_hs_closed_form against hs_function for n = 0..upto"""
    e_x = multiplicity(M, M.whole(), x)
    rows = []
    for n in range(upto + 1):
        closed = gcm_hs_closed_form(M, x, n, e_x)
        value = hs_function(M, x, n)
        rows.append({"n": n, "closed_form": closed, "value": value, "equal": closed == value})
    return rows
