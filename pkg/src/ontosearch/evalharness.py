"""Retrieval-quality evaluation over a labeled query corpus.

Runs every corpus query through the request pipeline and reports Precision,
Recall, and F-measure per department and overall, under both micro (pooled
counts) and macro (mean of per-query metrics) averaging.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import IO, Iterable, Mapping

from .errors import CorpusError
from .kb import KnowledgeBase
from .orchestrator import handle_request
from .query import RawQuery
from .reasoner import ScoringParams


def precision(retrieved: frozenset[str] | set[str], relevant: frozenset[str] | set[str]) -> float | None:
    """|retrieved & relevant| / |retrieved|; undefined (None) for empty retrieval."""
    if not retrieved:
        return None
    return len(set(retrieved) & set(relevant)) / len(retrieved)


def recall(retrieved: frozenset[str] | set[str], relevant: frozenset[str] | set[str]) -> float | None:
    """|retrieved & relevant| / |relevant|; undefined (None) for an empty gold set."""
    if not relevant:
        return None
    return len(set(retrieved) & set(relevant)) / len(relevant)


def f_measure(p: float | None, r: float | None) -> float | None:
    """Harmonic mean 2pr/(p+r); undefined if either input is, or p + r = 0."""
    if p is None or r is None or p + r == 0:
        return None
    return 2 * p * r / (p + r)


@dataclass(frozen=True)
class QueryRecord:
    """One labeled query: free text, its department category, and the gold employees."""

    id: str
    text: str
    department_label: str
    relevant: frozenset[str]
    k_override: int | None = None


@dataclass(frozen=True)
class EvalRow:
    """What one query retrieved, alongside its gold set."""

    query_id: str
    department_label: str
    retrieved: frozenset[str]
    relevant: frozenset[str]


@dataclass(frozen=True)
class MetricsCell:
    """Counts plus P/R/F for one group of queries.

    precision/recall/f_measure are micro (from the pooled counts); the
    macro_* fields average per-query metrics, skipping undefined ones.
    """

    query_count: int
    retrieved_total: int
    relevant_total: int
    hit_total: int
    precision: float | None
    recall: float | None
    f_measure: float | None
    macro_precision: float | None
    macro_recall: float | None
    macro_f_measure: float | None


@dataclass(frozen=True)
class MetricsReport:
    per_department: Mapping[str, MetricsCell]
    overall: MetricsCell
    params: Mapping[str, object]
    corpus_fingerprint: str


def load_corpus(source: bytes | str | IO[bytes]) -> list[QueryRecord]:
    """Parse a JSONL corpus: one {"id","text","department","relevant","k"?} per line."""
    data = source.read() if hasattr(source, "read") else source
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    records: list[QueryRecord] = []
    problems: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            problems.append(f"line {lineno}: invalid JSON ({exc.msg})")
            continue
        if not isinstance(obj, dict):
            problems.append(f"line {lineno}: record must be an object")
            continue
        try:
            records.append(
                QueryRecord(
                    id=str(obj["id"]),
                    text=str(obj["text"]),
                    department_label=str(obj["department"]),
                    relevant=frozenset(str(e) for e in obj["relevant"]),
                    k_override=int(obj["k"]) if "k" in obj and obj["k"] is not None else None,
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            problems.append(f"line {lineno}: {exc!r}")
    if problems:
        raise CorpusError(problems)
    return records


def validate_corpus(kb: KnowledgeBase, corpus: Iterable[QueryRecord]) -> list[str]:
    """Resolve every label and gold id against the KB; all problems reported."""
    problems: list[str] = []
    seen_ids: set[str] = set()
    for record in corpus:
        if record.id in seen_ids:
            problems.append(f"query '{record.id}': duplicate id")
        seen_ids.add(record.id)
        if record.department_label not in kb.departments_by_id:
            problems.append(f"query '{record.id}': unknown department '{record.department_label}'")
        if not record.relevant:
            problems.append(f"query '{record.id}': empty relevant set")
        for emp_id in sorted(record.relevant):
            if emp_id not in kb.employees_by_id:
                problems.append(f"query '{record.id}': unknown employee '{emp_id}'")
        if record.k_override is not None and record.k_override < 1:
            problems.append(f"query '{record.id}': k override {record.k_override} < 1")
    return problems


def eval_rows(
    kb: KnowledgeBase,
    corpus: list[QueryRecord],
    params: ScoringParams | None = None,
    default_k: int = 10,
) -> list[EvalRow]:
    """Run each corpus query through the pipeline; no aggregation."""
    problems = validate_corpus(kb, corpus)
    if problems:
        raise CorpusError(problems)
    rows = []
    for record in corpus:
        k = record.k_override if record.k_override is not None else default_k
        response = handle_request(kb, RawQuery(text=record.text, k=k), params)
        rows.append(
            EvalRow(
                query_id=record.id,
                department_label=record.department_label,
                retrieved=frozenset(r.employee_id for r in response.results),
                relevant=record.relevant,
            )
        )
    return rows


def corpus_fingerprint(corpus: Iterable[QueryRecord]) -> str:
    doc = [
        {
            "id": q.id,
            "text": q.text,
            "department": q.department_label,
            "relevant": sorted(q.relevant),
            "k": q.k_override,
        }
        for q in corpus
    ]
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode("utf-8")).hexdigest()


def run_eval(
    kb: KnowledgeBase,
    corpus: list[QueryRecord],
    params: ScoringParams | None = None,
    default_k: int = 10,
) -> MetricsReport:
    """Compute the full metrics report; a pure function of (kb, corpus, params)."""
    if not corpus:
        raise CorpusError(["corpus is empty"])
    params = params if params is not None else ScoringParams()
    rows = eval_rows(kb, corpus, params, default_k)
    per_department = {
        dept: _cell([row for row in rows if row.department_label == dept])
        for dept in sorted({row.department_label for row in rows})
    }
    overall = _cell(rows)
    assert overall.retrieved_total == sum(c.retrieved_total for c in per_department.values())
    assert overall.relevant_total == sum(c.relevant_total for c in per_department.values())
    assert overall.hit_total == sum(c.hit_total for c in per_department.values())
    snapshot: dict[str, object] = {
        "lambda_peer": params.lambda_peer,
        "dept_match_boost": params.dept_match_boost,
        "dept_mismatch_penalty": params.dept_mismatch_penalty,
        "hard_department_filter": params.hard_department_filter,
        "tau": params.tau,
        "expansion_weight": params.expansion_weight,
        "default_k": default_k,
    }
    return MetricsReport(
        per_department=per_department,
        overall=overall,
        params=snapshot,
        corpus_fingerprint=corpus_fingerprint(corpus),
    )


def _cell(rows: list[EvalRow]) -> MetricsCell:
    retrieved_total = sum(len(row.retrieved) for row in rows)
    relevant_total = sum(len(row.relevant) for row in rows)
    hit_total = sum(len(row.retrieved & row.relevant) for row in rows)
    per_p = [precision(row.retrieved, row.relevant) for row in rows]
    per_r = [recall(row.retrieved, row.relevant) for row in rows]
    per_f = [f_measure(p, r) for p, r in zip(per_p, per_r)]
    return MetricsCell(
        query_count=len(rows),
        retrieved_total=retrieved_total,
        relevant_total=relevant_total,
        hit_total=hit_total,
        precision=hit_total / retrieved_total if retrieved_total else None,
        recall=hit_total / relevant_total if relevant_total else None,
        f_measure=f_measure(
            hit_total / retrieved_total if retrieved_total else None,
            hit_total / relevant_total if relevant_total else None,
        ),
        macro_precision=_mean_defined(per_p),
        macro_recall=_mean_defined(per_r),
        macro_f_measure=_mean_defined(per_f),
    )


def _mean_defined(values: list[float | None]) -> float | None:
    defined = [v for v in values if v is not None]
    if not defined:
        return None
    return sum(defined) / len(defined)


def emit_report(report: MetricsReport, format: str = "json") -> bytes:
    """Serialize a report; byte-identical for equal reports.

    json: canonical, keys sorted. csv: one row per department plus an
    overall row with the micro metrics at 4 decimal places (round-half-even,
    undefined rendered as an empty field).
    """
    if format == "json":
        doc = {
            "per_department": {dept: _cell_doc(cell) for dept, cell in report.per_department.items()},
            "overall": _cell_doc(report.overall),
            "params": dict(report.params),
            "corpus_fingerprint": report.corpus_fingerprint,
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if format == "csv":
        lines = ["department,queries,precision,recall,f_measure"]
        cells = [(dept, report.per_department[dept]) for dept in sorted(report.per_department)]
        cells.append(("overall", report.overall))
        for name, cell in cells:
            lines.append(
                ",".join(
                    [
                        name,
                        str(cell.query_count),
                        _fmt4(cell.precision),
                        _fmt4(cell.recall),
                        _fmt4(cell.f_measure),
                    ]
                )
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format: {format!r}")


def _cell_doc(cell: MetricsCell) -> dict:
    return {
        "query_count": cell.query_count,
        "retrieved_total": cell.retrieved_total,
        "relevant_total": cell.relevant_total,
        "hit_total": cell.hit_total,
        "micro": {
            "precision": cell.precision,
            "recall": cell.recall,
            "f_measure": cell.f_measure,
        },
        "macro": {
            "precision": cell.macro_precision,
            "recall": cell.macro_recall,
            "f_measure": cell.macro_f_measure,
        },
    }


def _fmt4(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"
