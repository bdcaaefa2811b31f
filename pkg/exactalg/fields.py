"""
Coefficient fields
Exact rationals by default, prime fields F_p for speed
"""
from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

RATIONAL = "rational"
PRIME = "prime-field"

MAX_PRIME = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field of a polynomial ring"""
    kind: str = RATIONAL
    p: int = 0

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.p != 0:
                raise ValueError("rational field takes no characteristic")
        elif self.kind == PRIME:
            if not (1 < self.p < MAX_PRIME and isprime(self.p)):
                raise ValueError(f"F_p needs a prime p < 2^31, got {self.p}")
        else:
            raise ValueError(f"unknown field kind '{self.kind}'")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL, 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, int(p))

    @property
    def characteristic(self) -> int:
        return self.p

    def domain(self) -> Domain:
        """The sympy domain doing the arithmetic"""
        return QQ if self.kind == RATIONAL else GF(self.p)

    def label(self) -> str:
        """Session-file spelling: Q or Fp(p)"""
        return "Q" if self.kind == RATIONAL else f"Fp({self.p})"
