"""
Session files
One declaration per line:

    ring Q[X1,X2,X3]            (or ring Fp(101)[x,y])
    ideal I = X1*X2, X3^2       (also 0, 1 and intersect(A, B, ...))
    decomp I = [P, Q]
    module M = quot(I) (+) quot(J)
    filtration F on M = [[A, B], [R, R]]   (entries: ideal names, R or 0)
    sop x on M = X1 + X2, X3

Lines starting with # are comments. Every object is validated as it is read.
"""
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from exactalg.errors import (
    ContainmentError,
    DimensionConditionError,
    PolynomialParseError,
    SessionError,
    SgcmError,
)
from exactalg.fields import FieldSpec
from exactalg.ideals import Ideal, intersect_all
from exactalg.rings import PolyRing, is_homogeneous
from modules.filtration import Filtration, require_dimension_condition
from modules.quotient import QuotientModule
from parameters.system import ParameterSystem

NAME = r"[A-Za-z][A-Za-z0-9_]*"

_RING = re.compile(r"ring\s+(?P<field>Q|Fp\(\s*(?P<p>\d+)\s*\))\s*\[(?P<vars>[^\]]*)\]\s*$")
_IDEAL = re.compile(rf"ideal\s+(?P<name>{NAME})\s*=\s*(?P<body>.*)$")
_DECOMP = re.compile(rf"decomp\s+(?P<name>{NAME})\s*=\s*\[(?P<body>.*)\]\s*$")
_MODULE = re.compile(rf"module\s+(?P<name>{NAME})\s*=\s*(?P<body>.*)$")
_FILTRATION = re.compile(rf"filtration\s+(?P<name>{NAME})\s+on\s+(?P<module>{NAME})\s*=\s*(?P<body>.*)$")
_SOP = re.compile(rf"sop\s+(?P<name>{NAME})\s+on\s+(?P<module>{NAME})\s*=\s*(?P<body>.*)$")
_INTERSECT = re.compile(r"intersect\s*\((?P<args>.*)\)\s*$")
_QUOT = re.compile(rf"\s*quot\s*\(\s*(?P<arg>{NAME}|0)\s*\)\s*$")
_STEP = re.compile(r"\[([^\[\]]*)\]")

WHOLE = "R"
ZERO = "0"


@dataclass
class Session:
    """Validated objects of one session file, by name"""
    ring: PolyRing
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    decompositions: Dict[str, List[str]] = field(default_factory=dict)
    modules: Dict[str, QuotientModule] = field(default_factory=dict)
    module_components: Dict[str, List[str]] = field(default_factory=dict)
    filtrations: Dict[str, Filtration] = field(default_factory=dict)
    filtration_steps: Dict[str, List[List[str]]] = field(default_factory=dict)
    filtration_modules: Dict[str, str] = field(default_factory=dict)
    sops: Dict[str, ParameterSystem] = field(default_factory=dict)
    sop_modules: Dict[str, str] = field(default_factory=dict)
    source: Optional[str] = None

    def names(self) -> List[str]:
        return [*self.ideals, *self.modules, *self.filtrations, *self.sops]

    def module_name(self, name: Optional[str] = None) -> str:
        if name is None:
            if not self.modules:
                raise SessionError("session declares no module")
            return next(iter(self.modules))
        if name not in self.modules:
            raise SessionError("unknown module", name=name)
        return name

    def module(self, name: Optional[str] = None) -> QuotientModule:
        return self.modules[self.module_name(name)]

    def filtration(self, name: str, module: Optional[str] = None) -> Filtration:
        if name not in self.filtrations:
            raise SessionError("unknown filtration", name=name)
        if module is not None and self.filtration_modules[name] != module:
            raise SessionError(f"filtration is declared on {self.filtration_modules[name]}, not {module}", name=name)
        return self.filtrations[name]

    def filtrations_on(self, module: str) -> List[str]:
        return [f for f, m in self.filtration_modules.items() if m == module]

    def sop(self, name: str, module: Optional[str] = None) -> ParameterSystem:
        if name not in self.sops:
            raise SessionError("unknown sop", name=name)
        if module is not None and self.sop_modules[name] != module:
            raise SessionError(f"sop is declared on {self.sop_modules[name]}, not {module}", name=name)
        return self.sops[name]

    def sops_on(self, module: str) -> List[str]:
        return [x for x, m in self.sop_modules.items() if m == module]

    def decompositions_for(self, module: str) -> List[Optional[List[Ideal]]]:
        """Supplied decompositions per component of a module, None where absent"""
        result: List[Optional[List[Ideal]]] = []
        for component in self.module_components[module]:
            pieces = self.decompositions.get(component)
            result.append([self.ideals[p] for p in pieces] if pieces else None)
        return result

    def describe(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.label(),
            "ideals": {name: [self.ring.format(g) for g in I.generators] for name, I in self.ideals.items()},
            "decompositions": dict(self.decompositions),
            "modules": {
                name: {"components": self.module_components[name], "dimension": M.dimension}
                for name, M in self.modules.items()
            },
            "filtrations": {
                name: {"module": self.filtration_modules[name], "steps": steps, "dims": list(self.filtrations[name].dims)}
                for name, steps in self.filtration_steps.items()
            },
            "sops": {
                name: {"module": self.sop_modules[name], "elements": x.format()} for name, x in self.sops.items()
            },
        }


def split_top_level(text: str) -> List[Tuple[int, str]]:
    """Comma-separated pieces outside parentheses and brackets, with their offsets"""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append((start, text[start:i]))
            start = i + 1
    pieces.append((start, text[start:]))
    return [(offset + len(p) - len(p.lstrip()), p.strip()) for offset, p in pieces]


class _Reader:
    def __init__(self, source: Optional[str]):
        self.session: Optional[Session] = None
        self.source = source

    @property
    def ring(self) -> PolyRing:
        return self.session.ring

    def fail(self, message: str, line: int, column: Optional[int] = None, name: Optional[str] = None):
        raise SessionError(message, line=line, column=column, name=name)

    def require_ring(self, lineno: int) -> Session:
        if self.session is None:
            self.fail("the first declaration must be 'ring'", lineno, 1)
        return self.session

    def require_new(self, name: str, lineno: int) -> None:
        if name in self.session.names():
            self.fail("name already defined", lineno, name=name)

    def polynomials(self, body: str, lineno: int, column: int, name: str):
        polys = []
        for offset, text in split_top_level(body):
            try:
                f = self.ring.parse(text)
            except PolynomialParseError as exc:
                inner = exc.column - 1 if exc.column else 0
                self.fail(str(exc), lineno, column + offset + inner, name)
            if not is_homogeneous(f):
                self.fail(f"'{text}' is not homogeneous", lineno, column + offset, name)
            polys.append(f)
        return polys

    # ------------------------------------------------------ declarations

    def ring_line(self, m: re.Match, lineno: int) -> None:
        if self.session is not None:
            self.fail("ring declared twice", lineno, 1)
        spec = FieldSpec.rational() if m.group("field") == "Q" else None
        try:
            if spec is None:
                spec = FieldSpec.prime(int(m.group("p")))
            variables = [v.strip() for v in m.group("vars").split(",") if v.strip()]
            ring = PolyRing(variables, spec)
        except ValueError as exc:
            self.fail(str(exc), lineno, m.start("vars") + 1)
        self.session = Session(ring, source=self.source)

    def ideal_line(self, m: re.Match, lineno: int) -> None:
        name = m.group("name")
        self.require_new(name, lineno)
        body = m.group("body").strip()
        column = m.start("body") + 1
        if not body:
            self.fail("missing generators", lineno, column, name)
        intersect = _INTERSECT.match(body)
        if body == ZERO:
            ideal = Ideal.zero(self.ring)
        elif intersect:
            args = [a for _, a in split_top_level(intersect.group("args"))]
            parts = []
            for a in args:
                if a not in self.session.ideals:
                    self.fail(f"unknown ideal '{a}'", lineno, column, name)
                parts.append(self.session.ideals[a])
            ideal = intersect_all(parts, self.ring)
        else:
            ideal = Ideal(self.ring, self.polynomials(body, lineno, column, name))
        self.session.ideals[name] = ideal

    def decomp_line(self, m: re.Match, lineno: int) -> None:
        name = m.group("name")
        if name not in self.session.ideals:
            self.fail("decomposition of an undefined ideal", lineno, name=name)
        pieces = [p for _, p in split_top_level(m.group("body")) if p]
        for p in pieces:
            if p not in self.session.ideals:
                self.fail(f"unknown ideal '{p}'", lineno, m.start("body") + 1, name)
        if not pieces:
            self.fail("empty decomposition", lineno, name=name)
        meet = intersect_all([self.session.ideals[p] for p in pieces], self.ring)
        if meet != self.session.ideals[name]:
            self.fail("pieces do not intersect to the ideal", lineno, name=name)
        self.session.decompositions[name] = pieces

    def module_line(self, m: re.Match, lineno: int) -> None:
        name = m.group("name")
        self.require_new(name, lineno)
        components = []
        ideals = []
        for part in m.group("body").split("(+)"):
            q = _QUOT.match(part)
            if q is None:
                self.fail(f"expected quot(IDEAL), got '{part.strip()}'", lineno, m.start("body") + 1, name)
            arg = q.group("arg")
            if arg == ZERO:
                ideals.append(Ideal.zero(self.ring))
            elif arg in self.session.ideals:
                ideals.append(self.session.ideals[arg])
            else:
                self.fail(f"unknown ideal '{arg}'", lineno, m.start("body") + 1, name)
            components.append(arg)
        self.session.modules[name] = QuotientModule(self.ring, ideals, name)
        self.session.module_components[name] = components

    def filtration_line(self, m: re.Match, lineno: int) -> None:
        name, module = m.group("name"), m.group("module")
        self.require_new(name, lineno)
        if module not in self.session.modules:
            self.fail(f"unknown module '{module}'", lineno, m.start("module") + 1, name)
        M = self.session.modules[module]
        chain: List[List[str]] = []
        steps = []
        for step in _STEP.finditer(m.group("body")):
            tokens = [t for _, t in split_top_level(step.group(1))]
            if len(tokens) != M.ncomponents:
                self.fail(
                    f"step {len(chain)} has {len(tokens)} entries, the module has {M.ncomponents} components",
                    lineno,
                    m.start("body") + step.start() + 1,
                    name,
                )
            ideals = []
            for token, I in zip(tokens, M.components):
                if token == WHOLE:
                    ideals.append(Ideal.unit(self.ring))
                elif token == ZERO:
                    ideals.append(I)
                elif token in self.session.ideals:
                    ideals.append(self.session.ideals[token])
                else:
                    self.fail(f"unknown ideal '{token}'", lineno, m.start("body") + step.start() + 1, name)
            chain.append(tokens)
            steps.append(ideals)
        if not chain:
            self.fail("a filtration needs at least one step", lineno, m.start("body") + 1, name)
        try:
            submodules = tuple(M.submodule(ideals) for ideals in steps)
            F = Filtration(M, submodules, name=name)
            require_dimension_condition(F)
        except (ContainmentError, DimensionConditionError) as exc:
            self.fail(str(exc), lineno, name=name)
        self.session.filtrations[name] = F
        self.session.filtration_steps[name] = chain
        self.session.filtration_modules[name] = module

    def sop_line(self, m: re.Match, lineno: int) -> None:
        name, module = m.group("name"), m.group("module")
        self.require_new(name, lineno)
        if module not in self.session.modules:
            self.fail(f"unknown module '{module}'", lineno, m.start("module") + 1, name)
        polys = self.polynomials(m.group("body"), lineno, m.start("body") + 1, name)
        try:
            x = ParameterSystem(self.ring, tuple(polys), name)
        except SgcmError as exc:
            self.fail(str(exc), lineno, name=name)
        self.session.sops[name] = x
        self.session.sop_modules[name] = module


_DECLARATIONS = (
    (_RING, "ring_line"),
    (_IDEAL, "ideal_line"),
    (_DECOMP, "decomp_line"),
    (_MODULE, "module_line"),
    (_FILTRATION, "filtration_line"),
    (_SOP, "sop_line"),
)


def parse_session_text(text: str, source: Optional[str] = None) -> Session:
    reader = _Reader(source)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for pattern, handler in _DECLARATIONS:
            m = pattern.match(line)
            if m:
                if handler != "ring_line":
                    reader.require_ring(lineno)
                getattr(reader, handler)(m, lineno)
                break
        else:
            keyword = line.split()[0]
            reader.fail(f"cannot read declaration starting with '{keyword}'", lineno, 1)
    if reader.session is None:
        raise SessionError("empty session: no ring declared")
    return reader.session


def parse_session(path: Union[str, Path]) -> Session:
    path = Path(path)
    if not path.exists():
        raise SessionError(f"session file not found: {path}")
    return parse_session_text(path.read_text(encoding="utf-8"), source=str(path))


def _ideal_text(ring: PolyRing, I: Ideal) -> str:
    if I.is_zero:
        return ZERO
    return ", ".join(ring.format(g) for g in I.generators)


def serialize_session(session: Session) -> str:
    """The session in line format; parsing it back yields equal objects"""
    ring = session.ring
    lines = [f"ring {ring.label()}"]
    for name, I in session.ideals.items():
        lines.append(f"ideal {name} = {_ideal_text(ring, I)}")
    for name, pieces in session.decompositions.items():
        lines.append(f"decomp {name} = [{', '.join(pieces)}]")
    for name, components in session.module_components.items():
        lines.append(f"module {name} = " + " (+) ".join(f"quot({c})" for c in components))
    for name, chain in session.filtration_steps.items():
        steps = ", ".join("[" + ", ".join(step) + "]" for step in chain)
        lines.append(f"filtration {name} on {session.filtration_modules[name]} = [{steps}]")
    for name, x in session.sops.items():
        lines.append(f"sop {name} on {session.sop_modules[name]} = {', '.join(x.format())}")
    return "\n".join(lines) + "\n"
