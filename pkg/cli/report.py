"""
Analysis reports
Pydantic model of a command result, serialized as JSON with sorted keys
"""
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from parameters.fit import grid_text

from .config import SCHEMA_VERSION, TOOL_VERSION


class AnalysisReport(BaseModel):
    """Result of one command on one session"""
    schema_version: int = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION
    command: str
    session: Optional[str] = None
    module: Optional[str] = None
    options: Dict[str, Any] = Field(default_factory=dict)
    status: str = "success"
    message: str = ""
    verdicts: Dict[str, Any] = Field(default_factory=dict)
    tables: Dict[str, List[Dict[str, Any]]] = Field(default_factory=dict)
    text_tables: Dict[str, str] = Field(default_factory=dict)
    multiplicities: List[Dict[str, Any]] = Field(default_factory=list)
    invariants: Dict[str, Any] = Field(default_factory=dict)
    verifications: List[Dict[str, Any]] = Field(default_factory=list)
    seeds: List[int] = Field(default_factory=list)
    timing: Optional[float] = None

    def add_grid(self, label: str, values: Dict[tuple, int]) -> None:
        """Store a grid both as rows and as aligned text"""
        self.tables[label] = [
            {"n": list(n), "value": v} for n, v in sorted(values.items())
        ]
        self.text_tables[label] = grid_text(values, label)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False, default=str)


def error_report(command: str, message: str, session: Optional[str] = None) -> AnalysisReport:
    return AnalysisReport(command=command, session=session, status="error", message=message)
