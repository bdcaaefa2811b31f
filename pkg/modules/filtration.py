"""
Filtrations of quotient modules
A filtration is an ascending chain of split submodules ending at M; the
dimension filtration is built from irreducible (or supplied primary)
decompositions of the component ideals.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from exactalg.errors import ContainmentError, DecompositionRequiredError, DimensionConditionError
from exactalg.ideals import Ideal, intersect_all, saturation_at_irrelevant
from exactalg.monomials import krull_dimension

from .decomposition import monomial_irreducible_decomposition
from .lengths import submodule_dimension
from .quotient import QuotientModule, Submodule


@dataclass(frozen=True, eq=False)
class Filtration:
    """M_0 ⊆ M_1 ⊆ ... ⊆ M_t = M with cached dims d_i"""
    module: QuotientModule
    steps: Tuple[Submodule, ...]
    dims: Tuple[int, ...] = field(default=())
    name: Optional[str] = None

    def __post_init__(self):
        if not self.steps:
            raise ContainmentError("a filtration needs at least one step")
        if not self.steps[-1].is_whole:
            raise ContainmentError("the last step of a filtration must be the whole module")
        for i in range(1, len(self.steps)):
            if not self.steps[i - 1] <= self.steps[i]:
                raise ContainmentError(f"step {i - 1} is not contained in step {i}")
        if not self.dims:
            dims = tuple(submodule_dimension(self.module, N) for N in self.steps)
            object.__setattr__(self, "dims", dims)

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, i: int) -> Submodule:
        return self.steps[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Filtration)
            and other.module == self.module
            and len(other.steps) == len(self.steps)
            and all(a == b for a, b in zip(self.steps, other.steps))
        )

    def __hash__(self) -> int:
        return hash(self.steps)

    @property
    def t(self) -> int:
        return len(self.steps) - 1

    def quotient(self, i: int) -> QuotientModule:
        """M/M_i"""
        return self.module.quotient(self.steps[i])

    def format(self) -> str:
        return " ⊂ ".join(step.format() for step in self.steps)


def filtration_from_ideals(
    M: QuotientModule, chain: Sequence[Sequence[Ideal]], name: Optional[str] = None
) -> Filtration:
    steps = tuple(M.submodule(ideals) for ideals in chain)
    return Filtration(M, steps, name=name)


def trivial_filtration(M: QuotientModule) -> Filtration:
    """0 ⊂ M"""
    return Filtration(M, (M.zero(), M.whole()), name="trivial")


def check_dimension_condition(F: Filtration) -> bool:
    return all(a < b for a, b in zip(F.dims, F.dims[1:]))


def require_dimension_condition(F: Filtration) -> None:
    if not check_dimension_condition(F):
        raise DimensionConditionError(f"dimensions {list(F.dims)} are not strictly increasing")


def component_pieces(
    M: QuotientModule, decompositions: Optional[Sequence[Optional[Sequence[Ideal]]]] = None
) -> List[List[Ideal]]:
    """Decomposition pieces per component, monomial or supplied"""
    pieces: List[List[Ideal]] = []
    for k, I in enumerate(M.components):
        supplied = decompositions[k] if decompositions and k < len(decompositions) else None
        if supplied:
            if intersect_all(list(supplied), M.ring) != I:
                raise DecompositionRequiredError(
                    f"supplied decomposition of component {k} does not intersect to {I.format()}"
                )
            pieces.append(list(supplied))
        elif I.is_monomial:
            pieces.append(monomial_irreducible_decomposition(I))
        else:
            raise DecompositionRequiredError(
                f"component {k} ({I.format()}) is not monomial; supply 'decomp' for it"
            )
    return pieces


def dimension_filtration(
    M: QuotientModule, decompositions: Optional[Sequence[Optional[Sequence[Ideal]]]] = None
) -> Filtration:
    """
    D_0 ⊂ D_1 ⊂ ... ⊂ D_t = M where D_{i-1} is the largest submodule of D_i
    of smaller dimension and D_0 = H^0_m(M).
    """
    ring = M.ring
    d = M.dimension
    if d <= 0:
        return Filtration(M, (M.whole(),), name="D")

    pieces = component_pieces(M, decompositions)
    piece_dims = [[krull_dimension(q) for q in comp] for comp in pieces]
    levels = sorted({e for dims in piece_dims for e in dims if 0 < e < d})

    steps = [M.submodule([saturation_at_irrelevant(I) for I in M.components])]
    for e in levels:
        ideals = [
            intersect_all([q for q, dq in zip(comp, dims) if dq > e], ring)
            for comp, dims in zip(pieces, piece_dims)
        ]
        steps.append(M.submodule(ideals))
    steps.append(M.whole())
    F = Filtration(M, tuple(steps), name="D")
    require_dimension_condition(F)
    return F


def embeds_in_dimension_filtration(F: Filtration, D: Filtration) -> List[Dict[str, object]]:
    """
    For each M_j: the D_i with d_i ≤ dim M_j < d_{i+1}, whether M_j ⊆ D_i,
    and whether the dimensions agree.
    """
    rows = []
    for j, (N, e) in enumerate(zip(F.steps, F.dims)):
        if e < 0:
            rows.append({"step": j, "target": None, "contained": True, "same_dimension": True})
            continue
        target = max(i for i, di in enumerate(D.dims) if di <= e)
        rows.append(
            {
                "step": j,
                "target": target,
                "contained": N <= D.steps[target],
                "same_dimension": D.dims[target] == e,
            }
        )
    return rows
