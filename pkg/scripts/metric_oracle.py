#!/usr/bin/env python3
"""Standalone metric arithmetic: recompute P/R/F from recorded retrieval rows.

Reads JSON from stdin (or a file argument):

    {"queries": [{"department": "finance",
                  "retrieved": ["e1", "e2"],
                  "relevant": ["e1"]}, ...]}

and prints per-department and overall precision/recall/F under micro and
macro averaging. Intentionally self-contained: it must not import the
package it cross-checks.
"""

import json
import sys


def prf(hit, retrieved, relevant):
    p = hit / retrieved if retrieved else None
    r = hit / relevant if relevant else None
    if p is None or r is None or p + r == 0:
        f = None
    else:
        f = 2 * p * r / (p + r)
    return p, r, f


def mean(values):
    defined = [v for v in values if v is not None]
    return sum(defined) / len(defined) if defined else None


def summarize(rows):
    hit = sum(len(set(q["retrieved"]) & set(q["relevant"])) for q in rows)
    retrieved = sum(len(set(q["retrieved"])) for q in rows)
    relevant = sum(len(set(q["relevant"])) for q in rows)
    micro_p, micro_r, micro_f = prf(hit, retrieved, relevant)
    per_query = [
        prf(len(set(q["retrieved"]) & set(q["relevant"])), len(set(q["retrieved"])), len(set(q["relevant"])))
        for q in rows
    ]
    return {
        "query_count": len(rows),
        "retrieved_total": retrieved,
        "relevant_total": relevant,
        "hit_total": hit,
        "micro": {"precision": micro_p, "recall": micro_r, "f_measure": micro_f},
        "macro": {
            "precision": mean([p for p, _, _ in per_query]),
            "recall": mean([r for _, r, _ in per_query]),
            "f_measure": mean([f for _, _, f in per_query]),
        },
    }


def main():
    if len(sys.argv) > 1:
        with open(sys.argv[1], encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(sys.stdin)
    rows = doc["queries"]
    departments = sorted({q["department"] for q in rows})
    out = {
        "per_department": {
            dept: summarize([q for q in rows if q["department"] == dept]) for dept in departments
        },
        "overall": summarize(rows),
    }
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
