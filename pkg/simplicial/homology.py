"""
Reduced simplicial homology over a field
Exact ranks of the augmented boundary matrices via sympy's DomainMatrix
"""
from functools import lru_cache
from typing import List, Optional

from sympy.polys.matrices import DomainMatrix

from exactalg.fields import FieldSpec

from .complexes import SimplicialComplex


def _rank(rows: List[List[int]], nrows: int, ncols: int, field: FieldSpec) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    domain = field.domain()
    matrix = DomainMatrix([[domain.convert(x) for x in row] for row in rows], (nrows, ncols), domain)
    return matrix.rank()


def boundary_rank(delta: SimplicialComplex, k: int, field: FieldSpec) -> int:
    """Rank of ∂_k : C_k → C_{k-1}; ∂_0 is the augmentation onto C_{-1}"""
    groups = delta.faces_by_dimension()
    sources = groups.get(k, [])
    targets = groups.get(k - 1, [])
    if not sources or not targets:
        return 0
    order = {v: i for i, v in enumerate(delta.vertices)}
    index = {face: i for i, face in enumerate(targets)}
    rows = [[0] * len(sources) for _ in targets]
    for col, face in enumerate(sources):
        ordered = sorted(face, key=order.get)
        for pos, v in enumerate(ordered):
            rows[index[face - {v}]][col] = (-1) ** pos
    return _rank(rows, len(targets), len(sources), field)


@lru_cache(maxsize=4096)
def _ranks(delta: SimplicialComplex, field: FieldSpec) -> tuple:
    if delta.is_void:
        return (0,)
    groups = delta.faces_by_dimension()
    top = delta.dimension
    bd = {k: boundary_rank(delta, k, field) for k in range(0, top + 2)}
    ranks = []
    for k in range(-1, top + 1):
        chains = len(groups.get(k, []))
        ranks.append(chains - bd.get(k, 0) - bd.get(k + 1, 0))
    return tuple(ranks)


def reduced_homology_ranks(delta: SimplicialComplex, field: Optional[FieldSpec] = None) -> List[int]:
    """[rank H̃_{-1}, rank H̃_0, ..., rank H̃_{dim}]; the void complex gives [0]"""
    return list(_ranks(delta, field or FieldSpec.rational()))


def reduced_betti(delta: SimplicialComplex, k: int, field: Optional[FieldSpec] = None) -> int:
    """rank H̃_k, zero outside -1..dim"""
    ranks = _ranks(delta, field or FieldSpec.rational())
    if k < -1 or k + 1 >= len(ranks):
        return 0
    return ranks[k + 1]


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Σ (-1)^i f_i over i ≥ -1"""
    return sum((-1) ** (i + 1) * f for i, f in enumerate(delta.f_vector()))
