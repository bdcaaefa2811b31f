"""
Simplicial complexes and the Stanley-Reisner correspondence
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from exactalg.errors import NotSquarefreeError
from exactalg.ideals import Ideal

Face = FrozenSet[str]


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Complex on named vertices given by its facets.

    No facets at all is the void complex; the single facet ∅ is the empty
    complex {∅}. They differ: H̃_{-1}({∅}) has rank 1.
    """
    vertices: Tuple[str, ...]
    facets: Tuple[Face, ...]

    @classmethod
    def from_facets(cls, vertices: Sequence[str], facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        sets = {frozenset(f) for f in facets}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        for f in maximal:
            unknown = f - set(vertices)
            if unknown:
                raise ValueError(f"facet uses unknown vertices {sorted(unknown)}")
        order = {v: i for i, v in enumerate(vertices)}
        maximal.sort(key=lambda f: (len(f), sorted(order[v] for v in f)))
        return cls(tuple(vertices), tuple(maximal))

    @classmethod
    def void(cls, vertices: Sequence[str] = ()) -> "SimplicialComplex":
        return cls(tuple(vertices), ())

    @classmethod
    def simplex(cls, vertices: Sequence[str]) -> "SimplicialComplex":
        return cls.from_facets(vertices, [vertices])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """-1 for {∅}; the void complex also reports -1"""
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces(self) -> FrozenSet[Face]:
        found = set()
        for facet in self.facets:
            members = sorted(facet)
            for size in range(len(members) + 1):
                for sub in combinations(members, size):
                    found.add(frozenset(sub))
        return frozenset(found)

    def faces_by_dimension(self) -> Dict[int, List[Face]]:
        """Faces grouped by dimension, each group in a fixed vertex order"""
        order = {v: i for i, v in enumerate(self.vertices)}
        groups: Dict[int, List[Face]] = {}
        for face in self.faces:
            groups.setdefault(len(face) - 1, []).append(face)
        for dim in groups:
            groups[dim].sort(key=lambda f: sorted(order[v] for v in f))
        return groups

    def f_vector(self) -> List[int]:
        """(f_{-1}, f_0, f_1, ...)"""
        groups = self.faces_by_dimension()
        return [len(groups.get(k, [])) for k in range(-1, self.dimension + 1)]

    def __contains__(self, face: Iterable[str]) -> bool:
        return frozenset(face) in self.faces

    def format_facets(self) -> List[List[str]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        return [sorted(f, key=order.get) for f in self.facets]


def link(delta: SimplicialComplex, sigma: Iterable[str]) -> SimplicialComplex:
    """{τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}"""
    s = frozenset(sigma)
    if s not in delta.faces:
        raise ValueError(f"{sorted(s)} is not a face of the complex")
    facets = [f - s for f in delta.facets if s <= f]
    return SimplicialComplex.from_facets(delta.vertices, facets)


def stanley_reisner_complex(I: Ideal) -> SimplicialComplex:
    """Faces are the vertex sets whose product lies outside I"""
    names = I.ring.variables
    if not I.is_squarefree_monomial:
        raise NotSquarefreeError(
            f"{I.format()} is not a squarefree monomial ideal; use the parametric route"
        )
    if I.is_unit:
        return SimplicialComplex.void(names)
    nonfaces = [
        frozenset(names[i] for i, e in enumerate(g.LM) if e) for g in I.minimalized().generators
    ]
    facets: List[Face] = []
    for size in range(len(names), -1, -1):
        for sub in combinations(names, size):
            face = frozenset(sub)
            if any(nf <= face for nf in nonfaces) or any(face < f for f in facets):
                continue
            facets.append(face)
    return SimplicialComplex.from_facets(names, facets)
