"""
Irreducible decomposition of monomial ideals by splitting
"""
from typing import Dict, List, Sequence, Tuple

from exactalg.errors import NotMonomialError
from exactalg.ideals import Ideal
from exactalg.rings import Monomial, PolyRing, monomial_divides, monomial_support


def _minimal(monomials: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    ordered = sorted(set(monomials), key=lambda m: (sum(m), m))
    kept: List[Monomial] = []
    for m in ordered:
        if not any(monomial_divides(g, m) for g in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _split(generators: Tuple[Monomial, ...], nvars: int, memo: Dict) -> List[Tuple[Monomial, ...]]:
    if generators in memo:
        return memo[generators]
    if any(not any(m) for m in generators):
        result: List[Tuple[Monomial, ...]] = []
    else:
        mixed = [m for m in generators if len(monomial_support(m)) > 1]
        if not mixed:
            result = [generators]
        else:
            m = mixed[0]
            i = monomial_support(m)[0]
            power = tuple(m[i] if j == i else 0 for j in range(nvars))
            rest = tuple(0 if j == i else e for j, e in enumerate(m))
            result = _split(_minimal(generators + (power,)), nvars, memo)
            result = result + _split(_minimal(generators + (rest,)), nvars, memo)
    memo[generators] = result
    return result


def _contains(big: Tuple[Monomial, ...], small: Tuple[Monomial, ...]) -> bool:
    """Monomial ideal containment (small ⊆ big)"""
    return all(any(monomial_divides(g, m) for g in big) for m in small)


def monomial_irreducible_decomposition(I: Ideal) -> List[Ideal]:
    """
    I = ∩ Q_j with each Q_j generated by pure powers of variables.

    Components are deduplicated and any component containing another is
    dropped, which for irreducible monomial ideals is exactly irredundancy.
    The unit ideal gives the empty list.
    """
    if not I.is_monomial:
        raise NotMonomialError(f"{I.format()} has a non-monomial generator")
    ring: PolyRing = I.ring
    gens = _minimal([g.LM for g in I.generators])
    pieces = sorted(set(_split(gens, ring.ngens, {})))
    irredundant = [
        q for q in pieces if not any(p != q and _contains(q, p) for p in pieces)
    ]
    return [Ideal(ring, [ring.monomial(m) for m in q]) for q in irredundant]
