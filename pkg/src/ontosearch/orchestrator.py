"""Three-stage request pipeline.

The interface stage validates the raw request and assembles the response,
the manipulation stage turns text into a semantic query, and the extraction
stage runs the case-based search. Stages exchange immutable messages and
share only the KB; each request's stages run sequentially, any number of
requests may run concurrently.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .kb import KnowledgeBase
from .query import RawQuery, build_semantic_query, expand_query
from .reasoner import ScoringParams, SearchResult, search


class AgentStage(Enum):
    INTERFACE = "interface"
    MANIPULATION = "manipulation"
    EXTRACTION = "extraction"


@dataclass(frozen=True)
class StageEvent:
    request_id: str
    stage: AgentStage
    started_at: float
    ended_at: float
    summary: str


@dataclass(frozen=True)
class SearchResponse:
    request_id: str
    results: tuple[SearchResult, ...]
    unknown_terms: tuple[str, ...]
    department_key: str | None
    trace: tuple[StageEvent, ...]
    diagnostics: tuple[str, ...]
    error: str | None = None  # "empty_query" / "invalid_k"; None on success


def derive_request_id(kb: KnowledgeBase, raw: RawQuery) -> str:
    """Deterministic id so identical requests produce byte-identical output."""
    payload = f"{kb.fingerprint}|{raw.text}|{raw.department_filter or ''}|{raw.k}"
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def handle_request(
    kb: KnowledgeBase,
    raw: RawQuery,
    params: ScoringParams | None = None,
    clock: Callable[[], float] = time.monotonic,
    request_id: str | None = None,
) -> SearchResponse:
    """Run the full agent chain for one request.

    A blank query (or k < 1) is rejected by the interface stage and comes
    back as a structured error response whose trace holds only the interface
    event. Otherwise the trace holds exactly one event per stage, in
    pipeline order. Deterministic apart from timestamps.
    """
    params = params if params is not None else ScoringParams()
    rid = request_id if request_id is not None else derive_request_id(kb, raw)

    started = clock()
    error = None
    if not raw.text.strip():
        error = "empty_query"
    elif raw.k < 1:
        error = "invalid_k"
    ended = clock()
    trace = [StageEvent(rid, AgentStage.INTERFACE, started, ended, error or "request accepted")]
    if error is not None:
        return SearchResponse(
            request_id=rid,
            results=(),
            unknown_terms=(),
            department_key=None,
            trace=tuple(trace),
            diagnostics=(f"request rejected: {error}",),
            error=error,
        )

    started = clock()
    sq = expand_query(kb, build_semantic_query(kb, raw), weight=params.expansion_weight)
    ended = clock()
    trace.append(
        StageEvent(
            rid,
            AgentStage.MANIPULATION,
            started,
            ended,
            f"{len(sq.concepts)} concepts, {len(sq.unknown_terms)} unknown terms",
        )
    )

    started = clock()
    results = search(kb, sq, params, k=raw.k)
    ended = clock()
    trace.append(StageEvent(rid, AgentStage.EXTRACTION, started, ended, f"{len(results)} results"))

    diagnostics = []
    if not sq.concepts:
        diagnostics.append("no concepts mapped")
    if sq.unknown_terms:
        diagnostics.append("unmapped terms: " + ", ".join(sq.unknown_terms))
    return SearchResponse(
        request_id=rid,
        results=tuple(results),
        unknown_terms=sq.unknown_terms,
        department_key=sq.department_key,
        trace=tuple(trace),
        diagnostics=tuple(diagnostics),
    )


def pipeline_trace(response: SearchResponse) -> list[StageEvent]:
    """Stage events in pipeline order (the validated prefix on errors)."""
    return list(response.trace)
