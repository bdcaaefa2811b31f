"""
Serre multiplicities and the difference function I_{F,M}
e(x_1..x_s; N) is read off as the mixed finite difference of ℓ(N/x(n)N)
"""
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from exactalg.errors import MultiplicityNotStabilizedError, NotSystemOfParametersError
from exactalg.ideals import Ideal
from exactalg.monomials import is_finite
from exactalg.parallel import parallel_map
from modules.filtration import Filtration
from modules.lengths import component_subquotient_length, submodule_length
from modules.quotient import QuotientModule, Submodule

from .system import Exponents, ParameterSystem, ones, quotient_length

BASE_POINT = 2


def submodule_quotient_length(N: Submodule, x: ParameterSystem, n: Sequence[int]) -> int:
    """ℓ(N/x(n)N) with N = ⊕ J_k/I_k, i.e. Σ ℓ(J_k/(x(n)J_k + I_k))"""
    powers = Ideal(x.ring, x.powers(n))
    total = 0
    for I, J in zip(N.module.components, N.ideals):
        if J == I:
            continue
        length = component_subquotient_length(I + powers * J, J)
        if not is_finite(length):
            raise NotSystemOfParametersError(
                f"{x.format()} is not a system of parameters of the submodule"
            )
        total += int(length)
    return total


def _mixed_difference(N: Submodule, x: ParameterSystem, base: Exponents, threads: int) -> int:
    s = len(x)
    corners = list(product((0, 1), repeat=s))
    points = [tuple(b - 1 + c for b, c in zip(base, corner)) for corner in corners]
    values = parallel_map(lambda n: submodule_quotient_length(N, x, n), points, threads)
    grid = np.array([values[p] for p in points], dtype=np.int64).reshape((2,) * s)
    for axis in range(s):
        grid = np.diff(grid, axis=axis)
    return int(grid.reshape(-1)[0])


def multiplicity(
    M: QuotientModule,
    N: Submodule,
    x: ParameterSystem,
    base: int = BASE_POINT,
    verify: bool = True,
    threads: int = 1,
) -> int:
    """
    e(x_1..x_s; N) for s = len(x) = dim N. For s = 0 this is ℓ(N); the zero
    submodule gives 0. Recomputed at base+1 when `verify` is set.
    """
    if N.module != M:
        raise ValueError("submodule belongs to another module")
    s = len(x)
    if N.is_zero:
        return 0
    if s == 0:
        length = submodule_length(M, N)
        if not is_finite(length):
            raise NotSystemOfParametersError("empty system on a module of positive dimension")
        return int(length)
    at_base = _mixed_difference(N, x, (base,) * s, threads)
    if verify:
        at_next = _mixed_difference(N, x, (base + 1,) * s, threads)
        if at_next != at_base:
            raise MultiplicityNotStabilizedError(at_base, at_next)
    return at_base


@dataclass
class MultiplicityTable:
    """e(x_1..x_{d_i}; M_i) per filtration step; ℓ(M_i) when d_i ≤ 0"""
    dims: Tuple[int, ...]
    entries: Dict[int, int] = field(default_factory=dict)

    def correction(self, n: Sequence[int]) -> int:
        """Σ_i (n_1 ⋯ n_{d_i}) e_i"""
        return sum(prod(n[: max(d, 0)]) * self.entries[i] for i, d in enumerate(self.dims))

    def as_rows(self) -> List[Dict[str, int]]:
        return [{"step": i, "dim": d, "multiplicity": self.entries[i]} for i, d in enumerate(self.dims)]


def multiplicity_table(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    base: int = BASE_POINT,
    verify: bool = True,
    threads: int = 1,
) -> MultiplicityTable:
    table = MultiplicityTable(tuple(F.dims))
    for i, (N, d) in enumerate(zip(F.steps, F.dims)):
        if d < 0:
            table.entries[i] = 0
        else:
            table.entries[i] = multiplicity(M, N, x.prefix(d), base, verify, threads)
    return table


def I_F_M(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    n: Optional[Sequence[int]] = None,
    table: Optional[MultiplicityTable] = None,
) -> int:
    """ℓ(M/x(n)M) − Σ_i (n_1 ⋯ n_{d_i}) e(x_1..x_{d_i}; M_i)"""
    exps = ones(len(x)) if n is None else tuple(n)
    table = table or multiplicity_table(M, F, x)
    return quotient_length(M, x, exps) - table.correction(exps)


def is_standard_witness(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    table: Optional[MultiplicityTable] = None,
) -> Tuple[bool, int, int]:
    """(I_{F,M}(x) == I_{F,M}(x^2), value at (1..1), value at (2..2))"""
    table = table or multiplicity_table(M, F, x)
    d = len(x)
    low = I_F_M(M, F, x, ones(d), table)
    high = I_F_M(M, F, x, (2,) * d, table)
    return low == high, low, high


def grid_points(d: int, size: int) -> List[Exponents]:
    return list(product(range(1, size + 1), repeat=d))


def length_grid(
    M: QuotientModule, x: ParameterSystem, size: int, threads: int = 1, progress: bool = False
) -> Dict[Exponents, int]:
    """ℓ(M/x(n)M) for n in {1..size}^d"""
    return parallel_map(
        lambda n: quotient_length(M, x, n),
        grid_points(len(x), size),
        threads,
        progress,
        "lengths",
    )


def ifm_grid(
    M: QuotientModule,
    F: Filtration,
    x: ParameterSystem,
    size: int,
    table: Optional[MultiplicityTable] = None,
    threads: int = 1,
    progress: bool = False,
) -> Dict[Exponents, int]:
    """I_{F,M}(x(n)) for n in {1..size}^d"""
    table = table or multiplicity_table(M, F, x, threads=threads)
    lengths = length_grid(M, x, size, threads, progress)
    return {n: value - table.correction(n) for n, value in lengths.items()}
