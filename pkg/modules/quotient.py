"""
Quotient modules M = R/I_1 ⊕ ... ⊕ R/I_m and their split submodules
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from exactalg.errors import ContainmentError, RingMismatchError
from exactalg.ideals import Ideal, ideal_colon, intersect_all
from exactalg.monomials import krull_dimension
from exactalg.rings import Polynomial, PolyRing


class QuotientModule:
    """Finite direct sum of cyclic quotients R/I_k"""

    def __init__(self, ring: PolyRing, components: Sequence[Ideal], name: Optional[str] = None):
        comps = tuple(components)
        if not comps:
            raise ValueError("a module needs at least one component")
        for I in comps:
            if I.ring != ring:
                raise RingMismatchError(f"component {I} does not live in {ring.label()}")
        self.ring = ring
        self.components = comps
        self.name = name
        self._dim: Optional[int] = None

    def __repr__(self) -> str:
        return f"QuotientModule({self.format()})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientModule)
            and other.ring == self.ring
            and len(other.components) == len(self.components)
            and all(a == b for a, b in zip(self.components, other.components))
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.components))

    @property
    def ncomponents(self) -> int:
        return len(self.components)

    @property
    def dimension(self) -> int:
        if self._dim is None:
            self._dim = max(krull_dimension(I) for I in self.components)
        return self._dim

    @property
    def is_zero(self) -> bool:
        return all(I.is_unit for I in self.components)

    @property
    def is_monomial(self) -> bool:
        return all(I.is_monomial for I in self.components)

    @property
    def is_squarefree(self) -> bool:
        return all(I.is_unit or I.is_squarefree_monomial for I in self.components)

    def format(self) -> str:
        return " (+) ".join(f"quot{I.format()}" for I in self.components)

    # ---------------------------------------------------------- submodules

    def submodule(self, ideals: Sequence[Ideal]) -> "Submodule":
        return Submodule(self, tuple(ideals))

    def zero(self) -> "Submodule":
        return Submodule(self, self.components, _checked=True)

    def whole(self) -> "Submodule":
        return Submodule(self, tuple(Ideal.unit(self.ring) for _ in self.components), _checked=True)

    def quotient(self, N: "Submodule") -> "QuotientModule":
        """M/N presented as ⊕ R/J_k"""
        if N.module is not self and N.module != self:
            raise ContainmentError("submodule belongs to another module")
        return QuotientModule(self.ring, N.ideals)

    def extended(self, elements: Iterable[Polynomial]) -> "QuotientModule":
        """M/(elements)M, i.e. ⊕ R/(I_k + (elements))"""
        extra = tuple(elements)
        return QuotientModule(self.ring, [I.with_generators(extra) for I in self.components])


@dataclass(frozen=True, eq=False)
class Submodule:
    """N = ⊕ J_k/I_k with I_k ⊆ J_k componentwise"""
    module: QuotientModule
    ideals: Tuple[Ideal, ...]
    _checked: bool = False

    def __post_init__(self):
        if len(self.ideals) != self.module.ncomponents:
            raise ContainmentError(
                f"expected {self.module.ncomponents} component ideals, got {len(self.ideals)}"
            )
        if self._checked:
            return
        for k, (I, J) in enumerate(zip(self.module.components, self.ideals)):
            if J.ring != self.module.ring:
                raise RingMismatchError(f"component {k} ideal lives in another ring")
            if not J.contains_ideal(I):
                raise ContainmentError(f"component {k}: {I.format()} is not inside {J.format()}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and other.module == self.module
            and all(a == b for a, b in zip(self.ideals, other.ideals))
        )

    def __hash__(self) -> int:
        return hash(self.ideals)

    def __le__(self, other: "Submodule") -> bool:
        return all(B.contains_ideal(A) for A, B in zip(self.ideals, other.ideals))

    @property
    def is_zero(self) -> bool:
        return all(J == I for I, J in zip(self.module.components, self.ideals))

    @property
    def is_whole(self) -> bool:
        return all(J.is_unit for J in self.ideals)

    def annihilators(self) -> List[Ideal]:
        """I_k : J_k per component"""
        return [ideal_colon(I, J) for I, J in zip(self.module.components, self.ideals)]

    def annihilator(self) -> Ideal:
        return intersect_all(self.annihilators(), self.module.ring)

    def format(self) -> str:
        return "[" + ", ".join(_format_component(I, J) for I, J in zip(self.module.components, self.ideals)) + "]"


def _format_component(I: Ideal, J: Ideal) -> str:
    if J.is_unit:
        return "R"
    if J == I:
        return "0"
    return J.format()


def cyclic_presentation(N: Submodule, N_big: Submodule) -> Optional[List[Ideal]]:
    """
    Annihilators presenting N_big/N as ⊕ R/(J_k : g_k), one generator g_k per
    component (the unit ideal for a zero component). None when some component
    needs two or more generators.
    """
    result: List[Ideal] = []
    for J, J_big in zip(N.ideals, N_big.ideals):
        if J == J_big:
            result.append(Ideal.unit(J.ring))
            continue
        found = None
        for g in J_big.generators:
            r = J.normal_form(g)
            if r and J.with_generators([r]) == J_big:
                found = ideal_colon(J, Ideal(J.ring, [r]))
                break
        if found is None:
            return None
        result.append(found)
    return result


def quotient_by_submodule(M: QuotientModule, N: Submodule) -> QuotientModule:
    """M/N = ⊕ R/J_k"""
    return M.quotient(N)
