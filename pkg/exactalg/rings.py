"""
Polynomial rings over exact fields
Thin layer over sympy's sparse rings: variable naming, monomial orders,
elimination rings, the session-file polynomial grammar and canonical printing
"""
import re
from functools import lru_cache
from operator import itemgetter
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import MonomialOrder, ProductOrder, grevlex, lex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from .errors import PolynomialParseError, RingMismatchError
from .fields import FieldSpec

Polynomial = PolyElement
Monomial = Tuple[int, ...]

GREVLEX = "grevlex"
LEX = "lex"
ELIMINATION = "elimination"
ORDER_TAGS = (GREVLEX, LEX, ELIMINATION)

ELIMINATION_VARIABLE = "_t"

# degree of the zero polynomial; never compare it as an integer
NEG_INF = float("-inf")

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*^()]))")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _monomial_order(tag: str, split: int) -> MonomialOrder:
    if tag == GREVLEX:
        return grevlex
    if tag == LEX:
        return lex
    if tag == ELIMINATION:
        return ProductOrder(
            (grevlex, itemgetter(slice(0, split))),
            (grevlex, itemgetter(slice(split, None))),
        )
    raise ValueError(f"unknown monomial order '{tag}'")


@lru_cache(maxsize=None)
def _sympy_ring(names: Tuple[str, ...], field: FieldSpec, tag: str, split: int) -> SympyPolyRing:
    # cached so every PolyRing with the same key shares one sympy ring
    return SympyPolyRing(names, field.domain(), _monomial_order(tag, split))


class PolyRing:
    """
    k[variables] with a fixed monomial order.

    Elements are sympy PolyElements of `self.sympy_ring`. Elimination-block
    orders (the first `split` variables dominate) are only built through
    `elimination_ring()`.
    """

    def __init__(
        self,
        variables: Sequence[str],
        field: Optional[FieldSpec] = None,
        order: str = GREVLEX,
        split: int = 0,
        _internal: bool = False,
    ):
        names = tuple(str(v) for v in variables)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {list(names)}")
        for name in names[split:] if _internal else names:
            if not _NAME.match(name):
                raise ValueError(f"invalid variable name '{name}'")
        if order not in ORDER_TAGS:
            raise ValueError(f"unknown monomial order '{order}'")
        if order == ELIMINATION and not _internal:
            raise ValueError("elimination orders are built with elimination_ring()")

        self.variables = names
        self.field = field or FieldSpec.rational()
        self.order = order
        self.split = split
        self.sympy_ring = _sympy_ring(names, self.field, order, split)

    # ------------------------------------------------------------------ basics

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"PolyRing({self.label()}, order={self.order})"

    def _key(self):
        return (self.variables, self.field, self.order, self.split)

    def label(self) -> str:
        return f"{self.field.label()}[{','.join(self.variables)}]"

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def gens(self) -> Tuple[Polynomial, ...]:
        return tuple(self.sympy_ring.gens)

    @property
    def zero(self) -> Polynomial:
        return self.sympy_ring.zero

    @property
    def one(self) -> Polynomial:
        return self.sympy_ring.one

    def gen(self, name: str) -> Polynomial:
        try:
            return self.sympy_ring.gens[self.variables.index(name)]
        except ValueError:
            raise RingMismatchError(f"unknown variable '{name}' in {self.label()}") from None

    def owns(self, f: Polynomial) -> bool:
        return getattr(f, "ring", None) is self.sympy_ring

    def check(self, *polys: Polynomial) -> None:
        for f in polys:
            if not self.owns(f):
                raise RingMismatchError(f"polynomial {f} does not live in {self.label()}")

    def order_key(self, m: Monomial):
        return self.sympy_ring.order(m)

    def with_order(self, tag: str) -> "PolyRing":
        return PolyRing(self.variables, self.field, tag)

    # ------------------------------------------------------- construction

    def monomial(self, exponents: Sequence[int], coeff: Union[int, object] = 1) -> Polynomial:
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.ngens or min(exps) < 0:
            raise ValueError(f"bad exponent vector {exps} for {self.label()}")
        return self.sympy_ring.from_dict({exps: self.sympy_ring.domain.convert(coeff)})

    def from_terms(self, terms: Dict[Monomial, object]) -> Polynomial:
        domain = self.sympy_ring.domain
        return self.sympy_ring.from_dict({tuple(m): domain.convert(c) for m, c in terms.items()})

    def convert(self, f: Polynomial, source: "PolyRing") -> Polynomial:
        """Move f from a ring on the same variables (any order) into this one"""
        if source.variables != self.variables or source.field != self.field:
            raise RingMismatchError(f"cannot move {source.label()} into {self.label()}")
        return self.sympy_ring.from_dict(dict(f.items()))

    def parse(self, text: str) -> Polynomial:
        """
        Parse the session grammar: variables, integer literals, + - * ^ and
        parentheses; ^ binds tightest, unary minus allowed.
        """
        position = 0
        stripped = text.rstrip()
        if not stripped.strip():
            raise PolynomialParseError("empty polynomial", column=1)
        while position < len(stripped):
            match = _TOKEN.match(stripped, position)
            if match is None or match.end() == position:
                raise PolynomialParseError(
                    f"unexpected character '{stripped[position]}'", column=position + 1
                )
            name = match.group("name")
            if name is not None and name not in self.variables:
                raise PolynomialParseError(
                    f"unknown variable '{name}'", column=match.start("name") + 1
                )
            position = match.end()

        local = {name: Symbol(name) for name in self.variables}
        try:
            expr = parse_expr(stripped, local_dict=local, transformations=_TRANSFORMATIONS)
            return self.sympy_ring.from_expr(expr)
        except (SyntaxError, TypeError, ValueError, CoercionFailed) as exc:
            raise PolynomialParseError(f"cannot parse '{text.strip()}': {exc}") from None

    # ------------------------------------------------------- elimination

    def elimination_ring(self) -> "PolyRing":
        """k[_t, variables] with _t eliminated first"""
        return PolyRing(
            (ELIMINATION_VARIABLE,) + self.variables,
            self.field,
            ELIMINATION,
            split=1,
            _internal=True,
        )

    def lift(self, f: Polynomial, target: "PolyRing") -> Polynomial:
        """Embed f into an elimination ring of this ring"""
        pad = (0,) * target.split
        return target.sympy_ring.from_dict({pad + m: c for m, c in f.items()})

    def drop(self, f: Polynomial, source: "PolyRing") -> Polynomial:
        """Bring a t-free polynomial of the elimination ring back"""
        s = source.split
        terms = {}
        for m, c in f.items():
            if any(m[:s]):
                raise RingMismatchError("polynomial still involves elimination variables")
            terms[m[s:]] = c
        return self.sympy_ring.from_dict(terms)

    # ------------------------------------------------------- printing

    def format(self, f: Polynomial) -> str:
        """Canonical text, terms in decreasing monomial order"""
        if not f:
            return "0"
        domain = self.sympy_ring.domain
        pieces = []
        for monom, coeff in f.terms():
            value = domain.to_sympy(coeff)
            factors = []
            for name, e in zip(self.variables, monom):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            negative = value < 0
            magnitude = -value if negative else value
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)


def total_degree(f: Polynomial) -> Union[int, float]:
    """Total degree; NEG_INF for the zero polynomial"""
    if not f:
        return NEG_INF
    return max(sum(m) for m in f.itermonoms())


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(m) for m in f.itermonoms()}) <= 1


def is_monomial(f: Polynomial) -> bool:
    return len(f) == 1


def leading_monomial(f: Polynomial) -> Monomial:
    return f.LM


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_support(m: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(m) if e)


def iter_monomials(nvars: int, degree: int) -> Iterable[Monomial]:
    """All exponent vectors of the given total degree, in lex-descending order"""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in iter_monomials(nvars - 1, degree - first):
            yield (first,) + rest
