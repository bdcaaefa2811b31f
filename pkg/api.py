#!/usr/bin/env python3
"""
FastAPI backend for the sgcm toolkit
Runs toolkit commands on posted session text
"""

import os
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from cli.commands import SESSIONLESS, run_command
from cli.config import COMMANDS, TOOL_VERSION, get_config
from cli.corpus import example_path, list_examples
from cli.session import parse_session_text, serialize_session
from exactalg.errors import SessionError, SgcmError

app = FastAPI(title="SGCM Toolkit API", version=TOOL_VERSION)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class SessionRequest(BaseModel):
    session_text: str
    source: Optional[str] = None


class RunRequest(BaseModel):
    command: str
    session_text: Optional[str] = None
    options: Dict[str, Any] = Field(default_factory=dict)


class ParseResponse(BaseModel):
    status: str = "success"
    session: Dict[str, Any]
    normalized: str


def _session_error_detail(e: SgcmError) -> Dict[str, Any]:
    detail: Dict[str, Any] = {"error": type(e).__name__, "message": str(e)}
    for key in ("line", "column", "name"):
        value = getattr(e, key, None)
        if value is not None:
            detail[key] = value
    return detail


def _parse(text: str, source: Optional[str]):
    try:
        return parse_session_text(text, source=source)
    except SgcmError as e:
        raise HTTPException(status_code=400, detail=_session_error_detail(e))


@app.on_event("startup")
async def startup_event():
    """Startup message"""
    print("\n" + "=" * 70)
    print("✅ SGCM Toolkit API Ready")
    print("=" * 70 + "\n")


@app.get("/health")
async def health():
    """Health check endpoint"""
    return {"status": "healthy", "version": TOOL_VERSION}


@app.get("/commands")
async def commands() -> Dict[str, str]:
    return COMMANDS


@app.get("/examples")
async def examples() -> List[Dict[str, str]]:
    """Packaged worked examples with their session text"""
    return [
        {"id": example_id, "session_text": example_path(example_id).read_text(encoding="utf-8")}
        for example_id in list_examples()
    ]


@app.post("/parse", response_model=ParseResponse)
async def parse(request: SessionRequest):
    """Validate a session and return its normalized form"""
    session = _parse(request.session_text, request.source)
    return ParseResponse(session=session.describe(), normalized=serialize_session(session))


@app.post("/run")
async def run(request: RunRequest) -> Dict[str, Any]:
    """
    Run one command. Input errors are HTTP 400; mathematical outcomes,
    including undecided and error statuses, come back in the report.
    """
    if request.command not in COMMANDS:
        raise HTTPException(status_code=400, detail=f"unknown command '{request.command}'")
    if request.session_text is None and request.command not in SESSIONLESS:
        raise HTTPException(
            status_code=400, detail=_session_error_detail(SessionError(f"'{request.command}' needs a session"))
        )
    if request.command == "corpus" and request.options.get("out_dir"):
        raise HTTPException(status_code=400, detail="out_dir is not accepted over HTTP")
    session = _parse(request.session_text, "request") if request.session_text is not None else None
    report = run_command(session, request.command, request.options, get_config())
    return report.model_dump()


if __name__ == "__main__":
    import uvicorn

    port = int(os.getenv("PORT", "8080"))

    print(f"🌐 Starting SGCM Toolkit API on port {port}...")
    print(f"🔧 API docs: http://localhost:{port}/docs")

    uvicorn.run(app, host="0.0.0.0", port=port)
