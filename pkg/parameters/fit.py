"""
Exact multilinear fits and grid tables
"""
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, List, Sequence, Tuple

import pandas as pd
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Exponents = Tuple[int, ...]


@dataclass
class MultilinearFit:
    """
    f(n) = Σ_{i=0}^{d} a_i n_1 ⋯ n_i fitted through the chain points
    (2,..,2,1,..,1), then checked on every grid point.
    """
    coefficients: List[Fraction]
    exact: bool
    residuals: Dict[Exponents, Fraction]

    def evaluate(self, n: Sequence[int]) -> Fraction:
        return sum((a * prod(n[:i]) for i, a in enumerate(self.coefficients)), Fraction(0))

    def integer_coefficients(self) -> List[int]:
        if any(a.denominator != 1 for a in self.coefficients):
            raise ValueError("fit has non-integral coefficients")
        return [int(a) for a in self.coefficients]


def multilinear_fit(values: Dict[Exponents, int]) -> MultilinearFit:
    """Fit Σ a_i n_1 ⋯ n_i to a grid containing {1,2}^d"""
    if not values:
        raise ValueError("empty grid")
    d = len(next(iter(values)))
    chain = [(2,) * i + (1,) * (d - i) for i in range(d + 1)]
    missing = [p for p in chain if p not in values]
    if missing:
        raise ValueError(f"grid lacks the fitting points {missing}")

    rows = [[QQ(prod(p[:j])) for j in range(d + 1)] for p in chain]
    rhs = [[QQ(values[p])] for p in chain]
    A = DomainMatrix(rows, (d + 1, d + 1), QQ)
    b = DomainMatrix(rhs, (d + 1, 1), QQ)
    solution = A.lu_solve(b).to_Matrix()
    coefficients = [Fraction(int(solution[i, 0].p), int(solution[i, 0].q)) for i in range(d + 1)]

    fit = MultilinearFit(coefficients, True, {})
    for n, value in values.items():
        residual = Fraction(value) - fit.evaluate(n)
        if residual:
            fit.residuals[n] = residual
    fit.exact = not fit.residuals
    return fit


def grid_frame(values: Dict[Exponents, int], label: str = "value") -> pd.DataFrame:
    """One row per exponent vector, columns n1..nd and the value"""
    if not values:
        return pd.DataFrame(columns=[label])
    d = len(next(iter(values)))
    records = [dict({f"n{i + 1}": e for i, e in enumerate(n)}, **{label: v}) for n, v in sorted(values.items())]
    return pd.DataFrame.from_records(records, columns=[f"n{i + 1}" for i in range(d)] + [label])


def grid_text(values: Dict[Exponents, int], label: str = "value") -> str:
    """Aligned plain-text rendering of a grid"""
    return grid_frame(values, label).to_string(index=False)
