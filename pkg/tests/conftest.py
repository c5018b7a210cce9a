import threading
import time
from contextlib import contextmanager
from pathlib import Path

import pytest
import uvicorn

from ontosearch import load_corpus, load_kb, make_kb
from ontosearch.kb import Case, Department, Employee
from ontosearch.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.fixture(scope="session")
def fixture_kb():
    with open(FIXTURES / "acme-kb.json", "rb") as fh:
        return load_kb(fh)


@pytest.fixture(scope="session")
def full_corpus():
    with open(FIXTURES / "queries.jsonl", "rb") as fh:
        return load_corpus(fh)


@pytest.fixture(scope="session")
def micro_corpus():
    with open(FIXTURES / "micro-queries.jsonl", "rb") as fh:
        return load_corpus(fh)


@pytest.fixture()
def mini_kb():
    """Two employees, two annotated cases; the smallest interesting ranking setup."""
    return make_kb(
        concepts=["invoice", "approve", "payment"],
        departments=[Department("finance", "Finance", frozenset({"finance"}))],
        employees=[
            Employee("e7", "Pat Seven", "+1-555-0007", "pat@acme.example", "AP Lead", "finance"),
            Employee("e9", "Sam Nine", "+1-555-0009", "sam@acme.example", "Billing Clerk", "finance"),
        ],
        cases=[
            Case("c1", "e7", frozenset({"invoice", "approve", "payment"}), None, 0.9, 3),
            Case("c2", "e9", frozenset({"invoice"}), None, 1.0, 0),
        ],
        lexicon={"invoice": ["invoice"], "approve": ["approve"]},
    )


@contextmanager
def running_app(app):
    """Serve an ASGI app from a background thread on an ephemeral port."""
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 15
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("uvicorn did not start within 15s")
        time.sleep(0.02)
    port = server.servers[0].sockets[0].getsockname()[1]
    try:
        yield f"http://127.0.0.1:{port}"
    finally:
        server.should_exit = True
        thread.join(timeout=10)


@pytest.fixture(scope="session")
def live_server(fixture_kb):
    """Real uvicorn server serving the fixture KB."""
    with running_app(create_app(fixture_kb)) as base_url:
        yield base_url
