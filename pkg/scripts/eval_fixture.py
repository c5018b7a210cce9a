#!/usr/bin/env python3
"""Run the shipped query corpus against the fixture KB and print the metrics.

Usage:
    python3 scripts/eval_fixture.py [--corpus fixtures/queries.jsonl] [--k 10]

Prints the per-department CSV table plus micro/macro overall rows; handy for
eyeballing the effect of scoring-parameter changes.
"""

import argparse
from pathlib import Path

from ontosearch.evalharness import emit_report, load_corpus, run_eval
from ontosearch.kb import load_kb
from ontosearch.reasoner import ScoringParams

ROOT = Path(__file__).resolve().parent.parent


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kb", default=str(ROOT / "fixtures" / "acme-kb.json"))
    parser.add_argument("--corpus", default=str(ROOT / "fixtures" / "queries.jsonl"))
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--tau", type=float, default=0.2)
    parser.add_argument("--lambda-peer", type=float, default=0.1)
    args = parser.parse_args()

    with open(args.kb, "rb") as fh:
        kb = load_kb(fh)
    with open(args.corpus, "rb") as fh:
        corpus = load_corpus(fh)
    params = ScoringParams(tau=args.tau, lambda_peer=args.lambda_peer)
    report = run_eval(kb, corpus, params, default_k=args.k)

    print(emit_report(report, format="csv").decode("utf-8"))
    overall = report.overall
    print(f"macro overall: P={overall.macro_precision:.4f} R={overall.macro_recall:.4f} "
          f"F={overall.macro_f_measure:.4f}")
    print(f"corpus fingerprint: {report.corpus_fingerprint[:16]}")


if __name__ == "__main__":
    main()
