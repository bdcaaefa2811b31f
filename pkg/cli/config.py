"""
Configuration for the sgcm toolkit
"""
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from seqcm.detect import SearchOptions


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


@dataclass
class ToolkitConfig:
    """Configuration for computation settings"""
    threads: int = 1
    seed: int = 0
    budget: int = 8
    max_tries: int = 25
    base_point: int = 2
    dd_bound: int = 2
    grid: int = 2
    progress: bool = False
    record_timing: bool = False

    def search_options(self) -> SearchOptions:
        return SearchOptions(
            seed=self.seed,
            budget=self.budget,
            max_tries=self.max_tries,
            base=self.base_point,
            threads=self.threads,
            progress=self.progress,
        )


def get_config() -> ToolkitConfig:
    """Get configuration from environment variables or defaults"""
    load_dotenv()
    return ToolkitConfig(
        threads=max(1, int(os.getenv("SGCM_THREADS", "1"))),
        seed=int(os.getenv("SGCM_SEED", "0")),
        budget=int(os.getenv("SGCM_BUDGET", "8")),
        max_tries=int(os.getenv("SGCM_MAX_TRIES", "25")),
        base_point=int(os.getenv("SGCM_BASE_POINT", "2")),
        dd_bound=int(os.getenv("SGCM_DD_BOUND", "2")),
        grid=int(os.getenv("SGCM_GRID", "2")),
        progress=_flag("SGCM_PROGRESS"),
        record_timing=_flag("SGCM_RECORD_TIMING"),
    )


TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = 1

# Report status -> process exit code
EXIT_CODES = {
    "success": 0,
    "negative": 1,
    "undecided": 2,
    "error": 3,
}

STATUS_EMOJI = {
    "success": "✅",
    "negative": "❌",
    "undecided": "⚠️",
    "error": "❌",
}

COMMANDS = {
    "dimfilt": "Dimension filtration of a module",
    "good-sop": "Verify a given sop against a filtration, or search for one",
    "dd-check": "dd-sequence test on exponents up to the bound",
    "ifm": "Grid of I_{F,M}(x(n)) and of the lengths ℓ(M/x(n)M)",
    "invariant": "I_F(M) by the parametric and the cohomological route",
    "seq-gcm": "Sequentially generalized Cohen-Macaulay detection",
    "seq-cm": "Sequentially Cohen-Macaulay detection with the vanishing table",
    "hilbert-samuel": "Hilbert-Samuel coefficients and their identities",
    "verify-paper-example": "Recompute a packaged worked example (4.7, 5.5, 5.6)",
    "corpus": "Write a random monomial corpus of session files",
    "describe": "Dimensions, filtrations and Stanley-Reisner complexes of a session",
}
