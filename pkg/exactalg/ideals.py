"""
Ideals with cached Groebner bases
Sum, product, intersection by elimination, colon, saturation
"""
import threading
from functools import reduce
from typing import Iterable, List, Optional, Sequence

from sympy.polys.monomials import monomial_div, monomial_lcm

from .errors import ColonByZeroError, RingMismatchError
from .groebner import GroebnerBasis, groebner_basis, normal_form
from .rings import Polynomial, PolyRing, is_homogeneous, is_monomial, iter_monomials


class Ideal:
    """
    Ideal of a polynomial ring given by generators.

    The reduced Groebner basis is computed on first use and cached; two
    ideals compare equal when their reduced bases agree.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = tuple(g for g in generators if g)
        ring.check(*gens)
        self.ring = ring
        self.generators = gens
        self._gb: Optional[GroebnerBasis] = None
        self._lock = threading.Lock()

    # ---------------------------------------------------------- factories

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def irrelevant(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens)

    @classmethod
    def parse(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    # ---------------------------------------------------------- basis

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            basis = groebner_basis(self.generators, self.ring)
            with self._lock:
                if self._gb is None:
                    self._gb = basis
        return self._gb

    def leading_monomials(self):
        return self.groebner().leading_monomials

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner())

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(self.contains(g) for g in other.generators)

    # ---------------------------------------------------------- predicates

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.groebner().is_unit

    @property
    def is_monomial(self) -> bool:
        return all(is_monomial(g) for g in self.generators)

    @property
    def is_squarefree_monomial(self) -> bool:
        return self.is_monomial and all(max(g.LM) <= 1 for g in self.generators)

    @property
    def is_homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.generators)

    # ---------------------------------------------------------- dunder

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return self.groebner() == other.groebner()

    def __hash__(self) -> int:
        return hash(self.groebner())

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __repr__(self) -> str:
        return f"Ideal{self.format()}"

    def format(self) -> str:
        return "(" + ", ".join(self.ring.format(g) for g in self.generators) + ")"

    def format_basis(self) -> str:
        return "(" + ", ".join(self.ring.format(g) for g in self.groebner()) + ")"

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))

    def minimalized(self) -> "Ideal":
        """Same ideal, generated by its reduced basis"""
        return Ideal(self.ring, self.groebner().elements)


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in {I.ring.label()} and {J.ring.label()}")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.groebner() == J.groebner()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J ⊆ I"""
    return I.contains_ideal(J)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the t-free part of (t·I + (1−t)·J)"""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero or J.is_zero:
        return Ideal.zero(ring)
    if I.is_unit:
        return J.minimalized()
    if J.is_unit:
        return I.minimalized()
    if I.is_monomial and J.is_monomial:
        lcms = {
            monomial_lcm(f.LM, g.LM)
            for f in I.minimalized().generators
            for g in J.minimalized().generators
        }
        return Ideal(ring, [ring.monomial(m) for m in sorted(lcms)]).minimalized()

    elim = ring.elimination_ring()
    t = elim.gens[0]
    gens = [t * ring.lift(f, elim) for f in I.generators]
    gens += [(elim.one - t) * ring.lift(g, elim) for g in J.generators]
    basis = groebner_basis(gens, elim)
    kept = [ring.drop(g, elim) for g in basis if g.LM[0] == 0]
    return Ideal(ring, kept).minimalized()


def intersect_all(ideals: Sequence[Ideal], ring: PolyRing) -> Ideal:
    """Intersection of a list; the whole ring when the list is empty"""
    if not ideals:
        return Ideal.unit(ring)
    return reduce(ideal_intersection, ideals)


def _colon_element(I: Ideal, g: Polynomial) -> Ideal:
    ring = I.ring
    if I.is_unit or I.contains(g):
        return Ideal.unit(ring)
    if g.is_ground:
        return I.minimalized()
    if I.is_monomial and is_monomial(g):
        gens = [
            ring.monomial(monomial_div(monomial_lcm(f.LM, g.LM), g.LM))
            for f in I.minimalized().generators
        ]
        return Ideal(ring, gens).minimalized()
    meet = ideal_intersection(I, Ideal(ring, [g]))
    return Ideal(ring, [h.exquo(g) for h in meet.generators]).minimalized()


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J, intersecting the colons by each generator of J"""
    _same_ring(I, J)
    if J.is_zero:
        raise ColonByZeroError()
    parts = [_colon_element(I, g) for g in J.minimalized().generators]
    return intersect_all(parts, I.ring)


def colon_by_element(I: Ideal, g: Polynomial) -> Ideal:
    if not g:
        raise ColonByZeroError()
    I.ring.check(g)
    return _colon_element(I, g)


def saturation(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞ by iterated colon until the basis stops changing"""
    current = I.minimalized()
    while True:
        following = ideal_colon(current, J)
        if following == current:
            return following
        current = following


def saturation_at_irrelevant(I: Ideal) -> Ideal:
    return saturation(I, Ideal.irrelevant(I.ring))


def ideal_power(ring: PolyRing, elements: Sequence[Polynomial], k: int) -> Ideal:
    """(elements)^k generated by all degree-k products of the elements"""
    if k == 0:
        return Ideal.unit(ring)
    products: List[Polynomial] = []
    for exps in iter_monomials(len(elements), k):
        p = ring.one
        for f, e in zip(elements, exps):
            if e:
                p = p * f**e
        products.append(p)
    return Ideal(ring, products)
