"""
Standard-monomial computations on leading-term ideals
Krull dimension, vector-space length, Hilbert function, finite-length certification
"""
import math
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .ideals import Ideal
from .rings import Monomial, Polynomial, iter_monomials, monomial_divides, monomial_support

INFINITE = math.inf

Length = Union[int, float]


def is_finite(value: Length) -> bool:
    return value != INFINITE


def krull_dimension(I: Ideal) -> int:
    """
    dim R/I: largest set of variables containing the support of no leading
    monomial. The whole ring gives -1.
    """
    if I.is_unit:
        return -1
    n = I.ring.ngens
    supports = [set(monomial_support(m)) for m in I.leading_monomials()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def _standard_levels(leading: Sequence[Monomial], nvars: int) -> Iterator[List[Monomial]]:
    """Standard monomials grouped by degree, generated from their canonical parents"""
    level = [] if any(not any(m) for m in leading) else [(0,) * nvars]
    while True:
        yield level
        following = []
        for m in level:
            last = max((i for i, e in enumerate(m) if e), default=0)
            for i in range(last, nvars):
                child = m[:i] + (m[i] + 1,) + m[i + 1:]
                if not any(monomial_divides(lt, child) for lt in leading):
                    following.append(child)
        level = following


def standard_monomials(I: Ideal, degree: int) -> List[Monomial]:
    for d, level in enumerate(_standard_levels(I.leading_monomials(), I.ring.ngens)):
        if d == degree:
            return level


def hilbert_function(I: Ideal, d: int) -> int:
    """Number of degree-d standard monomials"""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return len(standard_monomials(I, d))


def hilbert_function_values(I: Ideal, upto: int) -> List[int]:
    """HF(R/I, d) for d = 0..upto"""
    values = []
    for d, level in enumerate(_standard_levels(I.leading_monomials(), I.ring.ngens)):
        if d > upto:
            break
        values.append(len(level))
    return values


def vector_space_length(I: Ideal) -> Length:
    """dim_k R/I, INFINITE when R/I has positive dimension"""
    if krull_dimension(I) >= 1:
        return INFINITE
    total = 0
    for level in _standard_levels(I.leading_monomials(), I.ring.ngens):
        if not level:
            return total
        total += len(level)


def contains_power_of_irrelevant(I: Ideal) -> Tuple[bool, Optional[int]]:
    """(True, N) with N minimal such that m^N ⊆ I, or (False, None)"""
    if krull_dimension(I) >= 1:
        return False, None
    if I.is_homogeneous:
        for d, level in enumerate(_standard_levels(I.leading_monomials(), I.ring.ngens)):
            if not level:
                return True, d
    ring = I.ring
    d = 0
    while True:
        if all(I.contains(ring.monomial(m)) for m in iter_monomials(ring.ngens, d)):
            return True, d
        d += 1


def degree_component_basis(I: Ideal, delta: int) -> List[Polynomial]:
    """Spanning set of the degree-delta piece of a homogeneous ideal"""
    ring = I.ring
    seen = {}
    for g in I.groebner():
        dg = sum(g.LM)
        if dg > delta:
            continue
        for m in iter_monomials(ring.ngens, delta - dg):
            p = g.mul_monom(m)
            seen.setdefault(tuple(sorted(p.items())), p)
    return [seen[k] for k in sorted(seen, key=lambda k: (tuple(m for m, _ in k), repr(k)))]


def linear_forms(I: Ideal) -> List[Polynomial]:
    return degree_component_basis(I, 1)
