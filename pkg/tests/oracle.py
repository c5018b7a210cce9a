"""Naive retrieval oracle: scores every case by a full scan, no index.

Deliberately reimplements the scoring arithmetic so the engine's candidate
pruning, per-employee aggregation, thresholding, ordering, and truncation
are all cross-checked against an independent path.
"""

import math


def naive_search(kb, sq, params, k=10):
    """Returns [(employee_id, score, case_id)] ranked like the engine."""
    if not sq.concepts:
        return []
    total_weight = sum(sq.concepts.values())
    best = {}
    for case in kb.cases:
        if not any(concept in case.concepts for concept in sq.concepts):
            continue  # shares no query concept: not a candidate
        matched = sum(w for concept, w in sq.concepts.items() if concept in case.concepts)
        sim = matched / total_weight
        conf = case.factor * (1.0 + params.lambda_peer * math.log2(1.0 + case.peers))
        if sq.department_key is None or case.department_id is None:
            modifier = 1.0
        elif sq.department_key == case.department_id:
            modifier = params.dept_match_boost
        elif params.hard_department_filter:
            modifier = 0.0
        else:
            modifier = params.dept_mismatch_penalty
        score = sim * conf * modifier
        current = best.get(case.employee_id)
        if current is None or score > current[0] or (score == current[0] and case.id < current[1]):
            best[case.employee_id] = (score, case.id)
    ranked = sorted(
        ((emp_id, score, case_id) for emp_id, (score, case_id) in best.items()),
        key=lambda row: (-row[1], row[0]),
    )
    return [row for row in ranked if row[1] >= params.tau][:k]
