"""
Systems of parameters
Quotient lengths ℓ(M/x(n)M) and the good-system test against a filtration
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from exactalg.errors import NotSystemOfParametersError, RingMismatchError
from exactalg.ideals import ideal_intersection
from exactalg.monomials import is_finite, vector_space_length
from exactalg.rings import Polynomial, PolyRing, total_degree
from modules.filtration import Filtration
from modules.quotient import QuotientModule

Exponents = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ParameterSystem:
    """
    Sequence x_1..x_d of positive-degree elements.

    `powers(n)` is x(n) = (x_1^{n_1}, ..., x_d^{n_d}).
    """
    ring: PolyRing
    elements: Tuple[Polynomial, ...]
    name: Optional[str] = None

    def __post_init__(self):
        self.ring.check(*self.elements)
        for f in self.elements:
            if total_degree(f) < 1:
                raise NotSystemOfParametersError(
                    f"parameter {self.ring.format(f)} has no positive degree"
                )

    @classmethod
    def parse(cls, ring: PolyRing, texts: Sequence[str], name: Optional[str] = None) -> "ParameterSystem":
        return cls(ring, tuple(ring.parse(t) for t in texts), name)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ParameterSystem)
            and other.ring == self.ring
            and len(other.elements) == len(self.elements)
            and all(a == b for a, b in zip(self.elements, other.elements))
        )

    def __hash__(self) -> int:
        return hash(tuple(self.format()))

    def powers(self, n: Optional[Sequence[int]] = None) -> List[Polynomial]:
        exps = ones(len(self)) if n is None else tuple(n)
        if len(exps) != len(self.elements):
            raise ValueError(f"expected {len(self.elements)} exponents, got {len(exps)}")
        if any(e < 1 for e in exps):
            raise ValueError(f"exponents must be positive, got {list(exps)}")
        return [f**e for f, e in zip(self.elements, exps)]

    def prefix(self, s: int) -> "ParameterSystem":
        return ParameterSystem(self.ring, self.elements[: max(s, 0)], self.name)

    def raised(self, n: Sequence[int]) -> "ParameterSystem":
        """The system x(n) itself"""
        return ParameterSystem(self.ring, tuple(self.powers(n)), self.name)

    def reordered(self, order: Sequence[int]) -> "ParameterSystem":
        return ParameterSystem(self.ring, tuple(self.elements[i] for i in order), self.name)

    def format(self) -> List[str]:
        return [self.ring.format(f) for f in self.elements]


def ones(d: int) -> Exponents:
    return (1,) * d


def quotient_length(M: QuotientModule, x: ParameterSystem, n: Optional[Sequence[int]] = None) -> int:
    """ℓ(M/x(n)M), summed over the components"""
    if x.ring != M.ring:
        raise RingMismatchError("parameters and module live in different rings")
    powers = x.powers(n)
    total = 0
    for I in M.components:
        length = vector_space_length(I.with_generators(powers))
        if not is_finite(length):
            raise NotSystemOfParametersError()
        total += int(length)
    return total


def is_sop(M: QuotientModule, x: ParameterSystem) -> bool:
    if len(x) != max(M.dimension, 0):
        return False
    try:
        quotient_length(M, x)
    except NotSystemOfParametersError:
        return False
    return True


def good_sop_violations(M: QuotientModule, F: Filtration, x: ParameterSystem) -> List[dict]:
    """Steps i < t and components k where M_i ∩ (x_{d_i+1}, ..., x_d)M ≠ 0"""
    violations = []
    for i in range(F.t):
        suffix = x.elements[max(F.dims[i], 0):]
        if not suffix:
            continue
        for k, (I, J) in enumerate(zip(M.components, F.steps[i].ideals)):
            if J == I:
                continue
            meet = ideal_intersection(J, I.with_generators(suffix))
            if not I.contains_ideal(meet):
                violations.append({"step": i, "component": k})
    return violations


def is_good_sop(M: QuotientModule, F: Filtration, x: ParameterSystem) -> bool:
    return not good_sop_violations(M, F, x)
