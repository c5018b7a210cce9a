"""Ontology-backed semantic employee search.

Free-text questions go through a three-stage pipeline (interface ->
manipulation -> extraction) over an immutable knowledge base of
uncertainty-annotated responsibility cases; an evaluation harness reports
Precision / Recall / F-measure per department.
"""

from .errors import (
    CorpusError,
    EmptyQuery,
    EmptyQueryConcepts,
    ParseError,
    UnknownClass,
    ValidationError,
)
from .evalharness import (
    MetricsCell,
    MetricsReport,
    QueryRecord,
    emit_report,
    f_measure,
    load_corpus,
    precision,
    recall,
    run_eval,
)
from .kb import (
    Case,
    ClassDef,
    Department,
    Employee,
    KnowledgeBase,
    Violation,
    build_index,
    dump_kb,
    load_kb,
    lookup_concepts,
    make_kb,
    subclass_of,
    validate_kb,
)
from .orchestrator import AgentStage, SearchResponse, StageEvent, handle_request, pipeline_trace
from .query import RawQuery, SemanticQuery, build_semantic_query, expand_query, normalize
from .reasoner import ScoredCase, ScoringParams, SearchResult, confidence, score_case, search, similarity

__all__ = [
    "AgentStage",
    "Case",
    "ClassDef",
    "CorpusError",
    "Department",
    "Employee",
    "EmptyQuery",
    "EmptyQueryConcepts",
    "KnowledgeBase",
    "MetricsCell",
    "MetricsReport",
    "ParseError",
    "QueryRecord",
    "RawQuery",
    "ScoredCase",
    "ScoringParams",
    "SearchResponse",
    "SearchResult",
    "SemanticQuery",
    "StageEvent",
    "UnknownClass",
    "ValidationError",
    "Violation",
    "build_index",
    "build_semantic_query",
    "confidence",
    "dump_kb",
    "emit_report",
    "expand_query",
    "f_measure",
    "handle_request",
    "load_corpus",
    "load_kb",
    "lookup_concepts",
    "make_kb",
    "normalize",
    "pipeline_trace",
    "precision",
    "recall",
    "run_eval",
    "score_case",
    "search",
    "similarity",
    "subclass_of",
    "validate_kb",
]
