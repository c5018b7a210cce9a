"""Read-only HTTP JSON API over a loaded knowledge base.

All handlers are stateless functions of the immutable KB, so the service
needs no locks and any number of requests may run concurrently. KB changes
require a restart.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .kb import KnowledgeBase, load_kb
from .orchestrator import SearchResponse, handle_request
from .query import RawQuery
from .reasoner import ScoringParams

DEFAULT_PORT = 8080


class UTF8JSONResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"


@dataclass(frozen=True)
class ServiceConfig:
    kb_path: str
    port: int = DEFAULT_PORT
    params: ScoringParams = field(default_factory=ScoringParams)
    cors_allowed_origin: str | None = None

    def __post_init__(self):
        if not (1 <= self.port <= 65535):
            raise ValueError(f"port must be in [1, 65535], got {self.port}")


# Contract for every 200 /api/search body; the four display fields are
# always present and non-empty.
API_SEARCH_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["request_id", "results", "unknown_terms", "diagnostics"],
    "additionalProperties": False,
    "properties": {
        "request_id": {"type": "string", "minLength": 1},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "employee_id",
                    "full_name",
                    "phone",
                    "email",
                    "position_title",
                    "department",
                    "score",
                    "matched_concepts",
                    "explanation",
                ],
                "additionalProperties": False,
                "properties": {
                    "employee_id": {"type": "string", "minLength": 1},
                    "full_name": {"type": "string", "minLength": 1},
                    "phone": {"type": "string", "minLength": 1},
                    "email": {"type": "string", "minLength": 1},
                    "position_title": {"type": "string", "minLength": 1},
                    "department": {"type": "string", "minLength": 1},
                    "score": {"type": "number", "minimum": 0},
                    "matched_concepts": {"type": "array", "items": {"type": "string"}},
                    "explanation": {"type": "string"},
                },
            },
        },
        "unknown_terms": {"type": "array", "items": {"type": "string"}},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
    },
}


def api_search_response(response: SearchResponse) -> dict:
    """Project the pipeline response onto the wire schema."""
    return {
        "request_id": response.request_id,
        "results": [
            {
                "employee_id": r.employee_id,
                "full_name": r.full_name,
                "phone": r.phone,
                "email": r.email,
                "position_title": r.position_title,
                "department": r.department_id,
                "score": r.score,
                "matched_concepts": sorted(r.best_case.matched_concepts),
                "explanation": r.explanation,
            }
            for r in response.results
        ],
        "unknown_terms": list(response.unknown_terms),
        "diagnostics": list(response.diagnostics),
    }


def create_app(
    kb: KnowledgeBase,
    params: ScoringParams | None = None,
    cors_allowed_origin: str | None = None,
) -> FastAPI:
    params = params if params is not None else ScoringParams()
    app = FastAPI(title="ontosearch", default_response_class=UTF8JSONResponse)
    if cors_allowed_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_allowed_origin],
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        return UTF8JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    @app.get("/api/search")
    def search_endpoint(q: str = "", dept: str | None = None, k: str = "10"):
        if not q.strip():
            return UTF8JSONResponse({"error": "invalid_query", "detail": "q must be non-blank"}, status_code=400)
        try:
            k_value = int(k)
        except ValueError:
            return UTF8JSONResponse({"error": "invalid_k", "detail": f"k must be an integer, got {k!r}"}, status_code=400)
        if k_value < 1:
            return UTF8JSONResponse({"error": "invalid_k", "detail": "k must be >= 1"}, status_code=400)
        if dept is not None and dept not in kb.departments_by_id:
            return UTF8JSONResponse({"error": "unknown_department", "detail": f"no department '{dept}'"}, status_code=404)
        response = handle_request(kb, RawQuery(text=q, department_filter=dept, k=k_value), params)
        if response.error is not None:
            return UTF8JSONResponse({"error": response.error, "detail": response.diagnostics[0]}, status_code=400)
        return api_search_response(response)

    @app.get("/api/departments")
    def departments_endpoint():
        return [{"id": d.id, "name": d.name} for d in kb.departments]

    @app.get("/api/employees/{employee_id}")
    def employee_endpoint(employee_id: str):
        emp = kb.employees_by_id.get(employee_id)
        if emp is None:
            return UTF8JSONResponse(
                {"error": "unknown_employee", "detail": f"no employee '{employee_id}'"}, status_code=404
            )
        return {
            "id": emp.id,
            "full_name": emp.full_name,
            "phone": emp.phone,
            "email": emp.email,
            "position_title": emp.position_title,
            "department": emp.department_id,
        }

    @app.get("/api/health")
    def health_endpoint():
        return {"status": "ok", "kb_fingerprint": kb.fingerprint}

    return app


def serve(config: ServiceConfig) -> None:
    """Load the KB, build the app, and block serving it."""
    import uvicorn

    with open(config.kb_path, "rb") as fh:
        kb = load_kb(fh)
    app = create_app(kb, config.params, config.cors_allowed_origin)
    uvicorn.run(app, host="0.0.0.0", port=config.port, log_level="info")
