"""
Command-line surface for the sgcm toolkit
Session files, reports, packaged examples and command dispatch
"""

from .commands import HANDLERS, run_command
from .config import COMMANDS, EXIT_CODES, ToolkitConfig, get_config
from .corpus import (
    CorpusEntry,
    example_id,
    example_path,
    generate_monomial_corpus,
    list_examples,
    load_example,
    write_corpus,
)
from .report import AnalysisReport, error_report
from .session import Session, parse_session, parse_session_text, serialize_session

__all__ = [
    "HANDLERS",
    "run_command",
    "COMMANDS",
    "EXIT_CODES",
    "ToolkitConfig",
    "get_config",
    "CorpusEntry",
    "example_id",
    "example_path",
    "generate_monomial_corpus",
    "list_examples",
    "load_example",
    "write_corpus",
    "AnalysisReport",
    "error_report",
    "Session",
    "parse_session",
    "parse_session_text",
    "serialize_session",
]
