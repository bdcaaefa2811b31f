"""
Seeded search for good systems of parameters
Position j with d_i < j ≤ d_{i+1} is drawn from Ann(M_i), as in the
existence argument for good systems
"""
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from exactalg.errors import SearchExhaustedError
from exactalg.ideals import Ideal
from exactalg.monomials import degree_component_basis
from exactalg.rings import Polynomial
from modules.filtration import Filtration, require_dimension_condition
from modules.quotient import QuotientModule

from .system import ParameterSystem, is_good_sop, is_sop

COEFFICIENT_CHOICES = (0, 1, -1, 2)
MAX_TRIES = 25
# step index for positions j ≤ d_0, where no step constrains x_j
UNCONSTRAINED = -1


def position_steps(F: Filtration, d: int) -> List[int]:
    """For each position j = 1..d the step i with d_i < j ≤ d_{i+1}, or UNCONSTRAINED when j ≤ d_0"""
    steps = []
    for j in range(1, d + 1):
        below = [i for i, di in enumerate(F.dims) if di < j]
        steps.append(below[-1] if below else UNCONSTRAINED)
    return steps


def _pools(M: QuotientModule, F: Filtration, degree: int) -> Dict[int, List[Polynomial]]:
    pools = {}
    for i in set(position_steps(F, M.dimension)):
        ann = Ideal.unit(M.ring) if i == UNCONSTRAINED else F.steps[i].annihilator()
        pools[i] = degree_component_basis(ann, degree)
    return pools


def _draw(rng: np.random.Generator, pool: List[Polynomial], zero: Polynomial) -> Polynomial:
    while True:
        coeffs = rng.choice(COEFFICIENT_CHOICES, size=len(pool))
        combo = zero
        for c, f in zip(coeffs, pool):
            if c:
                combo = combo + int(c) * f
        if combo:
            return combo


def find_good_sop(
    M: QuotientModule,
    F: Filtration,
    seed: int = 0,
    max_tries: int = MAX_TRIES,
    max_degree: int = 1,
    progress: bool = False,
    name: Optional[str] = None,
) -> ParameterSystem:
    """
    Random good system of parameters with respect to F, deterministic in
    the seed. Degrees 1..max_degree are tried in turn, max_tries draws each.
    """
    require_dimension_condition(F)
    ring = M.ring
    d = max(M.dimension, 0)
    if d == 0:
        return ParameterSystem(ring, (), name)

    rng = np.random.default_rng(seed)
    steps = position_steps(F, d)
    report = {"seed": seed, "tries": 0, "not_sop": 0, "not_good": 0, "empty_pools": []}
    for degree in range(1, max_degree + 1):
        pools = _pools(M, F, degree)
        empty = sorted(i for i, pool in pools.items() if not pool)
        if empty:
            report["empty_pools"].append({"degree": degree, "steps": empty})
            continue
        for _ in tqdm(range(max_tries), desc=f"sop search (degree {degree})", disable=not progress, leave=False):
            report["tries"] += 1
            x = ParameterSystem(ring, tuple(_draw(rng, pools[i], ring.zero) for i in steps), name)
            if not is_sop(M, x):
                report["not_sop"] += 1
                continue
            if not is_good_sop(M, F, x):
                report["not_good"] += 1
                continue
            return x
    raise SearchExhaustedError(
        f"no good system of parameters found after {report['tries']} draws (seed {seed})",
        progress=report,
    )
