"""Free-text to semantic query translation.

Realizes the request-manipulation stage: normalize the text, detect a
department key, map remaining tokens to weighted concepts, and expand the
concept set one hop through lexicon co-membership.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Mapping

from .errors import EmptyQuery
from .kb import KnowledgeBase, lookup_concepts

# Fixed stopword list; interrogative phrasing dominates onboarding questions.
STOPWORDS = frozenset(
    "a an the who whom what which how is are do does can for of to in on at and or "
    "i me my we our please".split()
)

DIRECT_WEIGHT = 1.0
DEFAULT_EXPANSION_WEIGHT = 0.5

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


@dataclass(frozen=True)
class RawQuery:
    """A user request as it arrives: free text, optional facet, result cap."""

    text: str
    department_filter: str | None = None
    k: int = 10


@dataclass(frozen=True)
class SemanticQuery:
    """The manipulated request: weighted concepts plus an optional department key."""

    concepts: Mapping[str, float]
    department_key: str | None
    unknown_terms: tuple[str, ...]
    origin_text: str


def normalize(text: str) -> list[str]:
    """Lowercase, replace punctuation with spaces, split, drop stopwords.

    Token order and duplicates are preserved; output may be empty.
    """
    return [t for t in _NON_ALNUM.sub(" ", text.lower()).split() if t not in STOPWORDS]


def detect_department(kb: KnowledgeBase, tokens: list[str]) -> tuple[str | None, list[str]]:
    """Find a department mention among the tokens.

    A single token or an adjacent token pair is compared (lowercase) against
    department names and aliases. The first leftmost match wins, a pair
    beating a single token at the same position; the matched span is removed
    from the returned tokens. On surface collisions the earliest-declared
    department wins.
    """
    surfaces: dict[str, str] = {}
    for dept in kb.departments:
        for surface in (dept.name.lower(), *sorted(dept.aliases)):
            surfaces.setdefault(surface, dept.id)
    for i, token in enumerate(tokens):
        if i + 1 < len(tokens):
            pair = f"{token} {tokens[i + 1]}"
            if pair in surfaces:
                return surfaces[pair], tokens[:i] + tokens[i + 2 :]
        if token in surfaces:
            return surfaces[token], tokens[:i] + tokens[i + 1 :]
    return None, list(tokens)


def build_semantic_query(kb: KnowledgeBase, raw: RawQuery) -> SemanticQuery:
    """Turn a raw query into a semantic one: normalize, detect the department,
    map tokens to concepts at weight 1.0.

    An explicit department_filter wins over text detection (which is then
    skipped entirely). Tokens mapping to no concept land in unknown_terms
    (deduplicated, first occurrence order). A query mapping to zero concepts
    is returned as-is, not an error.
    """
    if not raw.text.strip():
        raise EmptyQuery("query text is blank")
    tokens = normalize(raw.text)
    if raw.department_filter is not None:
        department = raw.department_filter
    else:
        department, tokens = detect_department(kb, tokens)
    weights: dict[str, float] = {}
    unknown: list[str] = []
    for token in tokens:
        mapped = lookup_concepts(kb, token)
        if mapped:
            for concept in sorted(mapped):
                weights[concept] = DIRECT_WEIGHT
        elif token not in unknown:
            unknown.append(token)
    return SemanticQuery(
        concepts=weights,
        department_key=department,
        unknown_terms=tuple(unknown),
        origin_text=raw.text,
    )


def expand_query(
    kb: KnowledgeBase,
    sq: SemanticQuery,
    weight: float = DEFAULT_EXPANSION_WEIGHT,
) -> SemanticQuery:
    """Add lexicon-sibling concepts of each directly-mapped concept.

    Siblings (concepts sharing a lexicon entry with a weight-1.0 concept)
    enter at the expansion weight unless already present at a higher or
    equal one. One hop only; idempotent.
    """
    if not sq.concepts:
        return sq
    expanded = dict(sq.concepts)
    siblings = kb.lexicon_siblings
    for concept, w in sq.concepts.items():
        if w < DIRECT_WEIGHT:
            continue
        for sibling in sorted(siblings.get(concept, ())):
            if expanded.get(sibling, 0.0) < weight:
                expanded[sibling] = weight
    if expanded == dict(sq.concepts):
        return sq
    return replace(sq, concepts=expanded)
