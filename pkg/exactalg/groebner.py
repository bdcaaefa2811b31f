"""
Buchberger's algorithm
Normal selection strategy with optional Gebauer-Moeller pair pruning.
Output is the reduced basis, sorted by leading monomial, so equal ideals
give identical bases.
"""
import heapq
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_div, monomial_lcm

from .errors import OrderMismatchError, RingMismatchError
from .rings import Monomial, Polynomial, PolyRing, monomial_divides

CACHE_SIZE = 4096


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced Groebner basis of an ideal for one monomial order"""
    ring: PolyRing
    elements: Tuple[Polynomial, ...]

    @property
    def order(self) -> str:
        return self.ring.order

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroebnerBasis) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> Hashable:
        return (self.ring, tuple(tuple(f.terms()) for f in self.elements))

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.LM for g in self.elements]

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0] == self.ring.one

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by G; zero iff f lies in the ideal"""
    if not G.ring.owns(f):
        ring_of_f = getattr(f, "ring", None)
        if ring_of_f is not None and tuple(str(s) for s in ring_of_f.symbols) == G.ring.variables:
            raise OrderMismatchError(
                f"basis computed for order '{G.order}' used on a polynomial of another order"
            )
        raise RingMismatchError(f"polynomial {f} does not live in {G.ring.label()}")
    if not f or not G.elements:
        return f
    return f.rem(list(G.elements))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials"""
    lcm = monomial_lcm(f.LM, g.LM)
    return f.mul_monom(monomial_div(lcm, f.LM)) - g.mul_monom(monomial_div(lcm, g.LM))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _generator_key(f: Polynomial):
    items = tuple(sorted(f.items()))
    return (tuple(m for m, _ in items), repr(items))


class _BasisCache:
    """LRU cache of reduced bases, write-once per (ring, generators) key"""

    def __init__(self, maxsize: int = CACHE_SIZE):
        self.maxsize = maxsize
        self._data: "OrderedDict[Hashable, GroebnerBasis]" = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Optional[GroebnerBasis]:
        with self._lock:
            basis = self._data.get(key)
            if basis is not None:
                self._data.move_to_end(key)
            return basis

    def put(self, key: Hashable, basis: GroebnerBasis) -> None:
        with self._lock:
            self._data.setdefault(key, basis)
            if len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_CACHE = _BasisCache()


def clear_basis_cache() -> None:
    _CACHE.clear()


def groebner_basis(
    generators: Iterable[Polynomial],
    ring: PolyRing,
    gebauer_moeller: bool = True,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `generators` in `ring`"""
    gens = list(generators)
    ring.check(*gens)

    unique = {}
    for f in gens:
        if f:
            g = f.monic()
            unique.setdefault(tuple(sorted(g.items())), g)
    polys = sorted(unique.values(), key=_generator_key)

    key = (ring, gebauer_moeller, tuple(tuple(sorted(f.items())) for f in polys))
    cached = _CACHE.get(key)
    if cached is not None:
        return cached

    if gebauer_moeller:
        raw = _buchberger_gm(polys, ring)
    else:
        raw = _buchberger_plain(polys, ring)
    basis = GroebnerBasis(ring, tuple(_reduce_basis(raw, ring)))
    _CACHE.put(key, basis)
    return basis


def _pair_key(ring: PolyRing, G: Sequence[Polynomial], i: int, j: int):
    lcm = monomial_lcm(G[i].LM, G[j].LM)
    return (sum(lcm), ring.order_key(lcm), j, i)


def _buchberger_plain(polys: List[Polynomial], ring: PolyRing) -> List[Polynomial]:
    G: List[Polynomial] = []
    heap: List = []
    for f in polys:
        r = f.rem(G) if G else f
        if r:
            G.append(r.monic())
    for j in range(len(G)):
        for i in range(j):
            heapq.heappush(heap, (_pair_key(ring, G, i, j), (i, j)))

    while heap:
        _, (i, j) = heapq.heappop(heap)
        if _coprime(G[i].LM, G[j].LM):
            continue
        r = s_polynomial(G[i], G[j]).rem(G)
        if r:
            G.append(r.monic())
            new = len(G) - 1
            for k in range(new):
                heapq.heappush(heap, (_pair_key(ring, G, k, new), (k, new)))
    return G


def _buchberger_gm(polys: List[Polynomial], ring: PolyRing) -> List[Polynomial]:
    G: List[Polynomial] = []
    active: List[int] = []
    pairs: Set[Tuple[int, int]] = set()
    heap: List = []

    def update(h: Polynomial) -> None:
        nonlocal active, pairs
        G.append(h)
        new = len(G) - 1
        lm_h = h.LM

        # chain criterion on the candidate pairs (i, new)
        candidates = list(active)
        kept: List[int] = []
        while candidates:
            i = candidates.pop(0)
            lcm_i = monomial_lcm(lm_h, G[i].LM)
            if _coprime(lm_h, G[i].LM) or not any(
                monomial_divides(monomial_lcm(lm_h, G[j].LM), lcm_i) for j in candidates + kept
            ):
                kept.append(i)
        fresh = [i for i in kept if not _coprime(lm_h, G[i].LM)]

        # old pairs whose lcm is strictly refined by lm_h
        survivors = set()
        for (i, j) in pairs:
            lcm_ij = monomial_lcm(G[i].LM, G[j].LM)
            if (
                monomial_divides(lm_h, lcm_ij)
                and monomial_lcm(G[i].LM, lm_h) != lcm_ij
                and monomial_lcm(G[j].LM, lm_h) != lcm_ij
            ):
                continue
            survivors.add((i, j))
        for i in fresh:
            survivors.add((i, new))
            heapq.heappush(heap, (_pair_key(ring, G, i, new), (i, new)))
        pairs = survivors
        active = [i for i in active if not monomial_divides(lm_h, G[i].LM)] + [new]

    for f in polys:
        current = [G[i] for i in active]
        r = f.rem(current) if current else f
        if r:
            update(r.monic())

    while heap:
        _, pair = heapq.heappop(heap)
        if pair not in pairs:
            continue
        pairs.discard(pair)
        i, j = pair
        r = s_polynomial(G[i], G[j]).rem([G[k] for k in active])
        if r:
            update(r.monic())
    return [G[i] for i in active]


def _reduce_basis(G: List[Polynomial], ring: PolyRing) -> List[Polynomial]:
    minimal: List[Polynomial] = []
    for f in sorted(G, key=lambda g: ring.order_key(g.LM)):
        if not any(monomial_divides(g.LM, f.LM) for g in minimal):
            minimal.append(f)
    reduced = []
    for idx, f in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = f.rem(others) if others else f
        reduced.append(r.monic())
    return sorted(reduced, key=lambda g: ring.order_key(g.LM))


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero"""
    elems = list(G.elements)
    for j in range(len(elems)):
        for i in range(j):
            if _coprime(elems[i].LM, elems[j].LM):
                continue
            if s_polynomial(elems[i], elems[j]).rem(elems):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    """Monic, and no leading monomial divides a monomial of another element"""
    for f in G.elements:
        if f.LC != G.ring.sympy_ring.domain.one:
            return False
        for g in G.elements:
            if g is f:
                continue
            if any(monomial_divides(g.LM, m) for m in f.itermonoms()):
                return False
    return True
