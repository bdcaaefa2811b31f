"""
Packaged worked examples and random monomial corpora
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Union

import numpy as np
from tqdm import tqdm

from exactalg.errors import SessionError

from .session import Session, parse_session, parse_session_text

DATA_DIR = Path(__file__).parent / "data"

EXAMPLES = {
    "4.7": "example_4_7.sgcm",
    "5.5": "example_5_5.sgcm",
    "5.6": "example_5_6.sgcm",
}

EXAMPLE_ALIASES = {
    "crossed-planes": "4.7",
    "direct-sum": "5.5",
    "flat-ifm": "5.6",
}

# probability that a generated module has two components
TWO_COMPONENTS = 0.3
# probability that a generated ideal is squarefree
SQUAREFREE = 0.5


def list_examples() -> List[str]:
    return sorted(EXAMPLES)


def example_id(name: str) -> str:
    """Canonical id for '4.7', 'example_4_7', 'example_4_7.sgcm' or an alias like 'crossed-planes'"""
    key = str(name).strip().lower()
    if key.endswith(".sgcm"):
        key = key[: -len(".sgcm")]
    key = key.replace("_", "-")
    if key in EXAMPLE_ALIASES:
        return EXAMPLE_ALIASES[key]
    if key.startswith("example-"):
        key = key[len("example-"):]
    key = key.replace("-", ".")
    if key not in EXAMPLES:
        available = ", ".join(list_examples() + sorted(EXAMPLE_ALIASES))
        raise SessionError(f"unknown example '{name}'; available: {available}")
    return key


def example_path(name: str) -> Path:
    return DATA_DIR / EXAMPLES[example_id(name)]


def load_example(example_id: str) -> Session:
    return parse_session(example_path(example_id))


@dataclass
class CorpusEntry:
    name: str
    text: str
    session: Session


def _monomial_text(names: Sequence[str], exponents: Sequence[int]) -> str:
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _random_generator(rng: np.random.Generator, nvars: int, max_degree: int, squarefree: bool) -> List[int]:
    degree = int(rng.integers(1, max_degree + 1))
    if squarefree:
        degree = min(degree, nvars)
        support = rng.choice(nvars, size=degree, replace=False)
        return [1 if i in support else 0 for i in range(nvars)]
    return [int(e) for e in rng.multinomial(degree, [1.0 / nvars] * nvars)]


def generate_monomial_corpus(
    count: int,
    seed: int = 0,
    max_vars: int = 4,
    max_degree: int = 3,
    progress: bool = False,
) -> List[CorpusEntry]:
    """
    Random quotients of polynomial rings in 2..max_vars variables by monomial
    ideals with generators of degree ≤ max_degree; single components or
    two-component direct sums. Deterministic in the seed.
    """
    if max_vars < 2:
        raise ValueError("max_vars must be at least 2")
    rng = np.random.default_rng(seed)
    entries = []
    for k in tqdm(range(count), desc="corpus", disable=not progress, leave=False):
        nvars = int(rng.integers(2, max_vars + 1))
        names = [f"x{i + 1}" for i in range(nvars)]
        ncomponents = 2 if rng.random() < TWO_COMPONENTS else 1
        lines = [f"# generated instance {k} (seed {seed})", f"ring Q[{','.join(names)}]"]
        for c in range(ncomponents):
            squarefree = bool(rng.random() < SQUAREFREE)
            ngens = int(rng.integers(1, nvars + 1))
            gens = {_monomial_text(names, _random_generator(rng, nvars, max_degree, squarefree)) for _ in range(ngens)}
            lines.append(f"ideal I{c + 1} = {', '.join(sorted(gens))}")
        lines.append("module M = " + " (+) ".join(f"quot(I{c + 1})" for c in range(ncomponents)))
        text = "\n".join(lines) + "\n"
        name = f"corpus_{seed}_{k:04d}"
        entries.append(CorpusEntry(name, text, parse_session_text(text, source=name)))
    return entries


def write_corpus(entries: Sequence[CorpusEntry], directory: Union[str, Path]) -> Dict[str, Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = {}
    for entry in entries:
        path = directory / f"{entry.name}.sgcm"
        path.write_text(entry.text, encoding="utf-8")
        written[entry.name] = path
    return written
