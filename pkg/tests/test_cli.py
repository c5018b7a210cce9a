import json
import subprocess
import sys

from conftest import FIXTURES

KB = str(FIXTURES / "acme-kb.json")
CORPUS = str(FIXTURES / "queries.jsonl")


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "ontosearch", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=120,
    )


def test_validate_fixture_ok():
    result = run_cli("validate", "--kb", KB)
    assert result.returncode == 0
    assert "OK" in result.stdout


def test_validate_reports_violations(tmp_path):
    doc = json.loads(open(KB).read())
    doc["cases"][0]["factor"] = 1.5
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    result = run_cli("validate", "--kb", str(bad))
    assert result.returncode == 1
    assert "factor" in result.stderr


def test_validate_without_kb_is_usage_error():
    result = run_cli("validate", env={"PATH": "/usr/bin:/bin"})
    assert result.returncode == 2
    assert "usage" in result.stderr.lower() or "--kb" in result.stderr


def test_search_prints_table():
    result = run_cli("search", "--kb", KB, "--query", "who approves invoices")
    assert result.returncode == 0
    assert "Jonas Keller" in result.stdout
    assert "NAME" in result.stdout


def test_search_blank_query_is_usage_error():
    result = run_cli("search", "--kb", KB, "--query", "")
    assert result.returncode == 2


def test_search_bad_k_is_usage_error():
    result = run_cli("search", "--kb", KB, "--query", "invoice", "--k", "0")
    assert result.returncode == 2


def test_search_unknown_dept_is_usage_error():
    result = run_cli("search", "--kb", KB, "--query", "invoice", "--dept", "atlantis")
    assert result.returncode == 2


def test_search_json_is_byte_identical():
    a = run_cli("search", "--kb", KB, "--query", "who approves invoices", "--json")
    b = run_cli("search", "--kb", KB, "--query", "who approves invoices", "--json")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    body = json.loads(a.stdout)
    assert body["results"][0]["employee_id"] == "e7"


def test_search_respects_k():
    result = run_cli("search", "--kb", KB, "--query", "who approves invoices", "--k", "1", "--json")
    assert len(json.loads(result.stdout)["results"]) == 1


def test_eval_writes_report(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("eval", "--kb", KB, "--corpus", CORPUS, "--out", str(out))
    assert result.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["overall"]["query_count"] == 24
    assert "overall micro" in result.stdout


def test_eval_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    result = run_cli("eval", "--kb", KB, "--corpus", CORPUS, "--out", str(out), "--format", "csv")
    assert result.returncode == 0
    assert out.read_text().startswith("department,queries,precision,recall,f_measure")


def test_eval_ghost_corpus_fails(tmp_path):
    corpus = tmp_path / "bad.jsonl"
    corpus.write_text('{"id": "q", "text": "invoice", "department": "finance", "relevant": ["ghost"]}\n')
    result = run_cli("eval", "--kb", KB, "--corpus", str(corpus), "--out", str(tmp_path / "r.json"))
    assert result.returncode == 1
    assert "ghost" in result.stderr


def test_unknown_subcommand_is_usage_error():
    result = run_cli("frobnicate")
    assert result.returncode == 2


def test_kb_env_var_fallback(tmp_path):
    import os

    env = dict(os.environ, ONTOSEARCH_KB=KB)
    result = run_cli("validate", env=env)
    assert result.returncode == 0
    assert "OK" in result.stdout
