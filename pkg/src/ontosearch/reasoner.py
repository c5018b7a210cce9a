"""Case-based result extraction.

Scores each candidate case as query coverage x annotation confidence x a
department modifier, keeps the best case per employee, and returns ranked
employee cards. Pure and stateless over the immutable KB.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyQueryConcepts
from .kb import Case, KnowledgeBase
from .query import SemanticQuery


@dataclass(frozen=True)
class ScoringParams:
    """Knobs of the extraction stage; defaults are the shipped configuration."""

    lambda_peer: float = 0.1  # peer-boost weight, >= 0
    dept_match_boost: float = 1.25  # > 0
    dept_mismatch_penalty: float = 0.75  # in (0, 1]
    hard_department_filter: bool = False
    tau: float = 0.2  # result threshold, >= 0
    expansion_weight: float = 0.5  # in (0, 1]

    def __post_init__(self):
        if self.lambda_peer < 0:
            raise ValueError(f"lambda_peer must be >= 0, got {self.lambda_peer}")
        if self.dept_match_boost <= 0:
            raise ValueError(f"dept_match_boost must be > 0, got {self.dept_match_boost}")
        if not (0.0 < self.dept_mismatch_penalty <= 1.0):
            raise ValueError(f"dept_mismatch_penalty must be in (0, 1], got {self.dept_mismatch_penalty}")
        if self.tau < 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")
        if not (0.0 < self.expansion_weight <= 1.0):
            raise ValueError(f"expansion_weight must be in (0, 1], got {self.expansion_weight}")


@dataclass(frozen=True)
class ScoredCase:
    """A case scored against one query; score = similarity x confidence x dept_modifier."""

    case_id: str
    similarity: float
    confidence: float
    dept_modifier: float
    score: float
    matched_concepts: frozenset[str]


@dataclass(frozen=True)
class SearchResult:
    """Employee card for the result list; display fields are KB-verbatim."""

    employee_id: str
    full_name: str
    phone: str
    email: str
    position_title: str
    department_id: str
    score: float
    best_case: ScoredCase
    explanation: str


def similarity(sq: SemanticQuery, case: Case) -> float:
    """Weighted query coverage: matched query weight over total query weight."""
    if not sq.concepts:
        raise EmptyQueryConcepts("semantic query has no concepts")
    total = sum(sq.concepts.values())
    hit = sum(w for concept, w in sq.concepts.items() if concept in case.concepts)
    return hit / total


def confidence(case: Case, params: ScoringParams) -> float:
    """factor x (1 + lambda_peer x log2(1 + peers)).

    Strictly increasing in factor, non-decreasing in peers, neutral at
    factor 1 / peers 0.
    """
    return case.factor * (1.0 + params.lambda_peer * math.log2(1.0 + case.peers))


def department_modifier(query_dept: str | None, case_dept: str | None, params: ScoringParams) -> float:
    if query_dept is None or case_dept is None:
        return 1.0
    if query_dept == case_dept:
        return params.dept_match_boost
    if params.hard_department_filter:
        return 0.0
    return params.dept_mismatch_penalty


def score_case(sq: SemanticQuery, case: Case, params: ScoringParams) -> ScoredCase:
    sim = similarity(sq, case)
    conf = confidence(case, params)
    modifier = department_modifier(sq.department_key, case.department_id, params)
    matched = frozenset(concept for concept in sq.concepts if concept in case.concepts)
    return ScoredCase(
        case_id=case.id,
        similarity=sim,
        confidence=conf,
        dept_modifier=modifier,
        score=sim * conf * modifier,
        matched_concepts=matched,
    )


def search(kb: KnowledgeBase, sq: SemanticQuery, params: ScoringParams, k: int = 10) -> list[SearchResult]:
    """Rank employees for a semantic query.

    Candidates come from the concept index only (never a full case scan).
    Each employee keeps their maximum-scoring case; employees below tau are
    dropped; ties break by employee id ascending. Deterministic: candidate
    iteration is sorted, so the order of kb.cases never matters.
    """
    if not sq.concepts:
        return []
    candidate_ids: set[str] = set()
    for concept in sq.concepts:
        candidate_ids.update(kb.index.get(concept, ()))
    best: dict[str, ScoredCase] = {}
    for case_id in sorted(candidate_ids):
        case = kb.cases_by_id[case_id]
        scored = score_case(sq, case, params)
        current = best.get(case.employee_id)
        if current is None or scored.score > current.score:
            best[case.employee_id] = scored
    results = []
    for employee_id in sorted(best):
        scored = best[employee_id]
        if scored.score < params.tau:
            continue
        emp = kb.employees_by_id[employee_id]
        case = kb.cases_by_id[scored.case_id]
        results.append(
            SearchResult(
                employee_id=emp.id,
                full_name=emp.full_name,
                phone=emp.phone,
                email=emp.email,
                position_title=emp.position_title,
                department_id=emp.department_id,
                score=scored.score,
                best_case=scored,
                explanation=explain(scored, case),
            )
        )
    results.sort(key=lambda r: (-r.score, r.employee_id))
    return results[:k]


def explain(scored: ScoredCase, case: Case) -> str:
    """Human-readable score breakdown, deterministic for golden outputs."""
    matched = ", ".join(sorted(scored.matched_concepts)) or "nothing"
    return (
        f"matched {matched}; case {case.id} (factor {case.factor:g}, peers {case.peers}): "
        f"similarity {scored.similarity:.4f} x confidence {scored.confidence:.4f} "
        f"x dept {scored.dept_modifier:.2f} = {scored.score:.4f}"
    )
