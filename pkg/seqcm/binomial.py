"""
Binomial convention for the invariant formulas
"""
from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b), zero unless 0 ≤ b ≤ a"""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def start_dimension(d: int) -> int:
    """Lower end of the k-range for a step of dimension d; the zero step counts as 0"""
    return max(d, 0)


def weight(d_low: int, d_high: int, j: int) -> int:
    """Σ_{k=d_low}^{d_high-1} C(k-1, j-1) with d_low read through start_dimension"""
    return sum(binom(k - 1, j - 1) for k in range(start_dimension(d_low), d_high))
