"""Command-line interface: validate / search / serve / eval.

Exit codes: 0 success, 1 validation or corpus failure, 2 usage error.
Flags win over the ONTOSEARCH_KB / ONTOSEARCH_PORT environment variables,
which win over built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import CorpusError, ParseError, ValidationError
from .evalharness import emit_report, load_corpus, run_eval
from .kb import KnowledgeBase, load_kb
from .orchestrator import handle_request
from .query import RawQuery
from .service import DEFAULT_PORT, ServiceConfig, api_search_response, serve

KB_ENV = "ONTOSEARCH_KB"
PORT_ENV = "ONTOSEARCH_PORT"


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontosearch",
        description="Semantic employee search over an ontology-backed knowledge base.",
    )
    sub = parser.add_subparsers(dest="command")

    p_validate = sub.add_parser("validate", help="check a KB file against every invariant")
    p_validate.add_argument("--kb", help=f"KB JSON path (default: ${KB_ENV})")
    p_validate.set_defaults(func=cmd_validate)

    p_search = sub.add_parser("search", help="run one query and print the ranked results")
    p_search.add_argument("--kb", help=f"KB JSON path (default: ${KB_ENV})")
    p_search.add_argument("--query", required=True, help="free-text query")
    p_search.add_argument("--dept", help="department id facet (overrides text detection)")
    p_search.add_argument("--k", type=int, default=10, help="result cap (default 10)")
    p_search.add_argument("--json", action="store_true", help="emit the API JSON instead of a table")
    p_search.set_defaults(func=cmd_search)

    p_serve = sub.add_parser("serve", help="run the HTTP search service")
    p_serve.add_argument("--kb", help=f"KB JSON path (default: ${KB_ENV})")
    p_serve.add_argument("--port", type=int, help=f"TCP port (default: ${PORT_ENV} or {DEFAULT_PORT})")
    p_serve.add_argument("--cors-origin", help="emit CORS headers for this origin")
    p_serve.set_defaults(func=cmd_serve)

    p_eval = sub.add_parser("eval", help="run a labeled corpus and write the metrics report")
    p_eval.add_argument("--kb", help=f"KB JSON path (default: ${KB_ENV})")
    p_eval.add_argument("--corpus", required=True, help="JSONL corpus path")
    p_eval.add_argument("--out", required=True, help="report output path")
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    p_eval.add_argument("--k", type=int, default=10, help="default result cap (default 10)")
    p_eval.set_defaults(func=cmd_eval)

    return parser


def _kb_path(args) -> str:
    path = args.kb or os.environ.get(KB_ENV)
    if not path:
        raise _UsageError(f"--kb is required (or set ${KB_ENV})")
    return path


def _load(path: str) -> KnowledgeBase:
    with open(path, "rb") as fh:
        return load_kb(fh)


def cmd_validate(args) -> int:
    path = _kb_path(args)
    try:
        kb = _load(path)
    except ValidationError as exc:
        for violation in exc.violations:
            print(violation, file=sys.stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(
        f"{path}: OK ({len(kb.departments)} departments, {len(kb.employees)} employees, "
        f"{len(kb.cases)} cases, {len(kb.concepts)} concepts, {len(kb.lexicon)} lexicon entries)"
    )
    return 0


def cmd_search(args) -> int:
    if not args.query.strip():
        raise _UsageError("--query must be non-blank")
    if args.k < 1:
        raise _UsageError("--k must be >= 1")
    try:
        kb = _load(_kb_path(args))
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.dept is not None and args.dept not in kb.departments_by_id:
        raise _UsageError(f"unknown department id '{args.dept}'")
    response = handle_request(kb, RawQuery(text=args.query, department_filter=args.dept, k=args.k))
    if args.json:
        print(json.dumps(api_search_response(response), sort_keys=True, indent=2))
        return 0
    if not response.results:
        print("no results")
    else:
        rows = [
            (r.full_name, r.phone, r.email, r.position_title, f"{r.score:.4f}")
            for r in response.results
        ]
        header = ("NAME", "PHONE", "EMAIL", "POSITION", "SCORE")
        widths = [max(len(header[i]), *(len(row[i]) for row in rows)) for i in range(5)]
        print("  ".join(header[i].ljust(widths[i]) for i in range(5)))
        for row in rows:
            print("  ".join(row[i].ljust(widths[i]) for i in range(5)))
    for line in response.diagnostics:
        print(f"note: {line}", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    port = args.port if args.port is not None else int(os.environ.get(PORT_ENV, DEFAULT_PORT))
    config = ServiceConfig(kb_path=_kb_path(args), port=port, cors_allowed_origin=args.cors_origin)
    try:
        serve(config)
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_eval(args) -> int:
    try:
        kb = _load(_kb_path(args))
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        with open(args.corpus, "rb") as fh:
            corpus = load_corpus(fh)
        report = run_eval(kb, corpus, default_k=args.k)
    except CorpusError as exc:
        for problem in exc.problems:
            print(problem, file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    with open(args.out, "wb") as fh:
        fh.write(emit_report(report, format=args.format))
    cell = report.overall
    print(
        f"wrote {args.out} ({args.format}); overall micro: "
        f"P={_fmt(cell.precision)} R={_fmt(cell.recall)} F={_fmt(cell.f_measure)} "
        f"over {cell.query_count} queries"
    )
    return 0


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
