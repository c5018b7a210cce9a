"""Knowledge base: ontology classes, directory records, responsibility cases, lexicon.

A KB is loaded from a single JSON document, validated as a whole, indexed,
and then treated as immutable shared state by every downstream stage.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable, Mapping

from .errors import ParseError, UnknownClass, ValidationError

CONCEPT_PATTERN = re.compile(r"[a-z][a-z0-9_]*\Z")

# Lexicon-miss fallback: suffixes tried in order, first hit wins.
# A stripped stem shorter than MIN_STEM chars is never looked up.
STRIP_SUFFIXES = ("es", "s", "ing")
MIN_STEM = 3

_TOP_LEVEL_KEYS = ("classes", "concepts", "departments", "employees", "cases", "lexicon")


@dataclass(frozen=True)
class ClassDef:
    """A node in the single-inheritance class forest."""

    name: str
    parent: str | None = None


@dataclass(frozen=True)
class Department:
    id: str
    name: str
    aliases: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Employee:
    id: str
    full_name: str
    phone: str
    email: str
    position_title: str
    department_id: str


@dataclass(frozen=True)
class Case:
    """One responsibility assertion: an employee linked to a concept set.

    factor is the per-case imperfection factor in (0, 1]; peers counts
    related colleagues and is >= 0.
    """

    id: str
    employee_id: str
    concepts: frozenset[str]
    department_id: str | None = None
    factor: float = 1.0
    peers: int = 0


@dataclass(frozen=True)
class Violation:
    kind: str  # "class" | "concept" | "department" | "employee" | "case" | "lexicon" | "index"
    entity_id: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind} '{self.entity_id}': {self.message}"


@dataclass(frozen=True)
class KnowledgeBase:
    """Immutable, validated, indexed knowledge base.

    Safe for unrestricted concurrent reads; never mutated after load.
    """

    classes: tuple[ClassDef, ...]
    concepts: frozenset[str]
    departments: tuple[Department, ...]
    employees: tuple[Employee, ...]
    cases: tuple[Case, ...]
    lexicon: Mapping[str, frozenset[str]]
    index: Mapping[str, frozenset[str]]  # concept -> ids of cases containing it

    @cached_property
    def classes_by_name(self) -> dict[str, ClassDef]:
        return {c.name: c for c in self.classes}

    @cached_property
    def departments_by_id(self) -> dict[str, Department]:
        return {d.id: d for d in self.departments}

    @cached_property
    def employees_by_id(self) -> dict[str, Employee]:
        return {e.id: e for e in self.employees}

    @cached_property
    def cases_by_id(self) -> dict[str, Case]:
        return {c.id: c for c in self.cases}

    @cached_property
    def lexicon_siblings(self) -> dict[str, frozenset[str]]:
        """Concept -> other concepts sharing at least one lexicon entry with it."""
        shared: dict[str, set[str]] = {}
        for mapped in self.lexicon.values():
            for concept in mapped:
                shared.setdefault(concept, set()).update(mapped)
        return {c: frozenset(s - {c}) for c, s in shared.items()}

    @cached_property
    def fingerprint(self) -> str:
        """Content hash of the canonical serialization."""
        return hashlib.sha256(dump_kb(self)).hexdigest()


def build_index(cases: Iterable[Case]) -> dict[str, frozenset[str]]:
    """Invert case concept sets: concept -> set of case ids containing it."""
    acc: dict[str, set[str]] = {}
    for case in cases:
        for concept in case.concepts:
            acc.setdefault(concept, set()).add(case.id)
    return {concept: frozenset(ids) for concept, ids in acc.items()}


def make_kb(
    classes: Iterable[ClassDef] = (),
    concepts: Iterable[str] = (),
    departments: Iterable[Department] = (),
    employees: Iterable[Employee] = (),
    cases: Iterable[Case] = (),
    lexicon: Mapping[str, Iterable[str]] | None = None,
    validate: bool = True,
) -> KnowledgeBase:
    """Assemble a KB from parts, build its index, and (by default) validate it."""
    kb = KnowledgeBase(
        classes=tuple(classes),
        concepts=frozenset(concepts),
        departments=tuple(departments),
        employees=tuple(employees),
        cases=tuple(cases),
        lexicon={term: frozenset(mapped) for term, mapped in (lexicon or {}).items()},
        index=build_index(cases),
    )
    if validate:
        violations = validate_kb(kb)
        if violations:
            raise ValidationError(violations)
    return kb


def validate_kb(kb: KnowledgeBase) -> list[Violation]:
    """Check every KB invariant. Violations are accumulated, never fail-fast."""
    out: list[Violation] = []

    seen_classes: set[str] = set()
    for cls in kb.classes:
        if not cls.name:
            out.append(Violation("class", "?", "empty class name"))
        elif cls.name in seen_classes:
            out.append(Violation("class", cls.name, "duplicate class name"))
        seen_classes.add(cls.name)
    by_name = {c.name: c for c in kb.classes}
    for cls in kb.classes:
        if cls.parent is not None and cls.parent not in by_name:
            out.append(Violation("class", cls.name, f"parent '{cls.parent}' is not a declared class"))
    out.extend(_find_class_cycles(kb.classes))

    for concept in sorted(kb.concepts):
        if not CONCEPT_PATTERN.match(concept):
            out.append(Violation("concept", concept, "does not match [a-z][a-z0-9_]*"))

    seen_depts: set[str] = set()
    for dept in kb.departments:
        if not dept.id:
            out.append(Violation("department", "?", "empty id"))
        elif dept.id in seen_depts:
            out.append(Violation("department", dept.id, "duplicate id"))
        seen_depts.add(dept.id)
        if not dept.name:
            out.append(Violation("department", dept.id, "empty name"))
        for alias in sorted(dept.aliases):
            if alias != alias.lower():
                out.append(Violation("department", dept.id, f"alias '{alias}' is not lowercase"))

    dept_ids = {d.id for d in kb.departments}
    seen_emps: set[str] = set()
    for emp in kb.employees:
        if not emp.id:
            out.append(Violation("employee", "?", "empty id"))
        elif emp.id in seen_emps:
            out.append(Violation("employee", emp.id, "duplicate id"))
        seen_emps.add(emp.id)
        for field_name in ("full_name", "phone", "email", "position_title"):
            if not getattr(emp, field_name):
                out.append(Violation("employee", emp.id, f"empty {field_name}"))
        if emp.email and emp.email.count("@") != 1:
            out.append(Violation("employee", emp.id, f"email '{emp.email}' must contain exactly one '@'"))
        if emp.department_id not in dept_ids:
            out.append(Violation("employee", emp.id, f"department '{emp.department_id}' does not exist"))

    emp_ids = {e.id for e in kb.employees}
    seen_cases: set[str] = set()
    for case in kb.cases:
        if not case.id:
            out.append(Violation("case", "?", "empty id"))
        elif case.id in seen_cases:
            out.append(Violation("case", case.id, "duplicate id"))
        seen_cases.add(case.id)
        if case.employee_id not in emp_ids:
            out.append(Violation("case", case.id, f"employee '{case.employee_id}' does not exist"))
        if case.department_id is not None and case.department_id not in dept_ids:
            out.append(Violation("case", case.id, f"department '{case.department_id}' does not exist"))
        if not (0.0 < case.factor <= 1.0):
            out.append(Violation("case", case.id, f"factor {case.factor!r} outside (0, 1]"))
        if case.peers < 0:
            out.append(Violation("case", case.id, f"peers {case.peers} is negative"))
        if not case.concepts:
            out.append(Violation("case", case.id, "empty concept set"))
        for concept in sorted(case.concepts - kb.concepts):
            out.append(Violation("case", case.id, f"concept '{concept}' is not declared"))

    for term in sorted(kb.lexicon):
        mapped = kb.lexicon[term]
        if not term or term != term.lower() or any(ch.isspace() for ch in term):
            out.append(Violation("lexicon", term, "term must be lowercase and whitespace-free"))
        if not mapped:
            out.append(Violation("lexicon", term, "maps to no concepts"))
        for concept in sorted(mapped - kb.concepts):
            out.append(Violation("lexicon", term, f"concept '{concept}' is not declared"))

    expected = build_index(kb.cases)
    if dict(kb.index) != expected:
        for concept in sorted(set(kb.index) | set(expected)):
            if kb.index.get(concept) != expected.get(concept):
                out.append(
                    Violation(
                        "index",
                        concept,
                        f"index entry {sorted(kb.index.get(concept, ()))} != inversion {sorted(expected.get(concept, ()))}",
                    )
                )

    return out


def _find_class_cycles(classes: tuple[ClassDef, ...]) -> list[Violation]:
    by_name = {c.name: c for c in classes}
    out = []
    for cls in classes:
        seen = {cls.name}
        cur = cls.parent
        while cur is not None and cur in by_name:
            if cur in seen:
                out.append(Violation("class", cls.name, f"parent chain cycles at '{cur}'"))
                break
            seen.add(cur)
            cur = by_name[cur].parent
    return out


def subclass_of(kb: KnowledgeBase, a: str, b: str) -> bool:
    """True iff a == b or b is reachable from a via parent links."""
    classes = kb.classes_by_name
    if a not in classes:
        raise UnknownClass(a)
    if b not in classes:
        raise UnknownClass(b)
    cur: str | None = a
    seen: set[str] = set()
    while cur is not None and cur not in seen:
        if cur == b:
            return True
        seen.add(cur)
        cur = classes[cur].parent if cur in classes else None
    return False


def lookup_concepts(kb: KnowledgeBase, term: str) -> frozenset[str]:
    """Map a normalized (lowercase) term to concepts.

    Exact lexicon hit first; on a miss, retry after stripping "es", "s",
    "ing" in that order (first hit wins, stem keeps >= 3 chars). Returns
    the empty set for unmapped terms.
    """
    hit = kb.lexicon.get(term)
    if hit is not None:
        return hit
    for suffix in STRIP_SUFFIXES:
        if term.endswith(suffix):
            stem = term[: -len(suffix)]
            if len(stem) >= MIN_STEM:
                hit = kb.lexicon.get(stem)
                if hit is not None:
                    return hit
    return frozenset()


def load_kb(source: bytes | str | IO[bytes]) -> KnowledgeBase:
    """Parse, validate, and index a KB document (UTF-8 JSON).

    Raises ParseError for malformed documents (with line/column context
    where available) and ValidationError listing every invariant breach.
    Loading is deterministic; the returned KB is immutable.
    """
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}") from exc
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    return kb_from_doc(doc)


def kb_from_doc(doc: object) -> KnowledgeBase:
    """Build a KB from an already-parsed JSON document (strict schema)."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    unknown = sorted(set(doc) - set(_TOP_LEVEL_KEYS))
    if unknown:
        raise ParseError(f"unknown top-level keys: {', '.join(unknown)}")
    missing = sorted(set(_TOP_LEVEL_KEYS) - set(doc))
    if missing:
        raise ParseError(f"missing top-level keys: {', '.join(missing)}")

    classes = tuple(_parse_class(i, item) for i, item in enumerate(_expect_list(doc, "classes")))
    raw_concepts = _expect_list(doc, "concepts")
    violations: list[Violation] = []
    seen: set[str] = set()
    for i, concept in enumerate(raw_concepts):
        if not isinstance(concept, str):
            raise ParseError(f"concepts[{i}] must be a string")
        if concept in seen:
            violations.append(Violation("concept", concept, "declared more than once"))
        seen.add(concept)
    departments = tuple(_parse_department(i, item) for i, item in enumerate(_expect_list(doc, "departments")))
    employees = tuple(_parse_employee(i, item) for i, item in enumerate(_expect_list(doc, "employees")))
    cases = tuple(_parse_case(i, item) for i, item in enumerate(_expect_list(doc, "cases")))
    raw_lexicon = doc["lexicon"]
    if not isinstance(raw_lexicon, dict):
        raise ParseError("lexicon must be an object")
    lexicon: dict[str, frozenset[str]] = {}
    for term, mapped in raw_lexicon.items():
        if not isinstance(mapped, list) or not all(isinstance(c, str) for c in mapped):
            raise ParseError(f"lexicon entry '{term}' must map to a list of strings")
        lexicon[term] = frozenset(mapped)

    kb = KnowledgeBase(
        classes=classes,
        concepts=frozenset(raw_concepts),
        departments=departments,
        employees=employees,
        cases=cases,
        lexicon=lexicon,
        index=build_index(cases),
    )
    violations.extend(validate_kb(kb))
    if violations:
        raise ValidationError(violations)
    return kb


def kb_to_doc(kb: KnowledgeBase) -> dict:
    """Project a KB back onto the document schema (sets emitted sorted)."""
    return {
        "classes": [{"name": c.name, "parent": c.parent} for c in kb.classes],
        "concepts": sorted(kb.concepts),
        "departments": [
            {"id": d.id, "name": d.name, "aliases": sorted(d.aliases)} for d in kb.departments
        ],
        "employees": [
            {
                "id": e.id,
                "full_name": e.full_name,
                "phone": e.phone,
                "email": e.email,
                "position_title": e.position_title,
                "department_id": e.department_id,
            }
            for e in kb.employees
        ],
        "cases": [
            {
                "id": c.id,
                "employee_id": c.employee_id,
                "concepts": sorted(c.concepts),
                "department_id": c.department_id,
                "factor": c.factor,
                "peers": c.peers,
            }
            for c in kb.cases
        ],
        "lexicon": {term: sorted(mapped) for term, mapped in sorted(kb.lexicon.items())},
    }


def dump_kb(kb: KnowledgeBase) -> bytes:
    """Canonical serialization; load_kb(dump_kb(kb)) reproduces kb."""
    return (json.dumps(kb_to_doc(kb), indent=2, sort_keys=True) + "\n").encode("utf-8")


def _expect_list(doc: dict, key: str) -> list:
    value = doc[key]
    if not isinstance(value, list):
        raise ParseError(f"'{key}' must be a list")
    return value


def _string_field(kind: str, i: int, item: dict, key: str, optional: bool = False) -> str | None:
    value = item.get(key)
    if value is None and optional:
        return None
    if not isinstance(value, str):
        raise ParseError(f"{kind}[{i}].{key} must be a string")
    return value


def _parse_class(i: int, item: object) -> ClassDef:
    if not isinstance(item, dict):
        raise ParseError(f"classes[{i}] must be an object")
    return ClassDef(
        name=_string_field("classes", i, item, "name"),
        parent=_string_field("classes", i, item, "parent", optional=True),
    )


def _parse_department(i: int, item: object) -> Department:
    if not isinstance(item, dict):
        raise ParseError(f"departments[{i}] must be an object")
    aliases = item.get("aliases", [])
    if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
        raise ParseError(f"departments[{i}].aliases must be a list of strings")
    return Department(
        id=_string_field("departments", i, item, "id"),
        name=_string_field("departments", i, item, "name"),
        aliases=frozenset(aliases),
    )


def _parse_employee(i: int, item: object) -> Employee:
    if not isinstance(item, dict):
        raise ParseError(f"employees[{i}] must be an object")
    return Employee(
        id=_string_field("employees", i, item, "id"),
        full_name=_string_field("employees", i, item, "full_name"),
        phone=_string_field("employees", i, item, "phone"),
        email=_string_field("employees", i, item, "email"),
        position_title=_string_field("employees", i, item, "position_title"),
        department_id=_string_field("employees", i, item, "department_id"),
    )


def _parse_case(i: int, item: object) -> Case:
    if not isinstance(item, dict):
        raise ParseError(f"cases[{i}] must be an object")
    concepts = item.get("concepts")
    if not isinstance(concepts, list) or not all(isinstance(c, str) for c in concepts):
        raise ParseError(f"cases[{i}].concepts must be a list of strings")
    factor = item.get("factor")
    if isinstance(factor, bool) or not isinstance(factor, (int, float)):
        raise ParseError(f"cases[{i}].factor must be a number")
    peers = item.get("peers")
    if isinstance(peers, bool) or not isinstance(peers, int):
        raise ParseError(f"cases[{i}].peers must be an integer")
    return Case(
        id=_string_field("cases", i, item, "id"),
        employee_id=_string_field("cases", i, item, "employee_id"),
        concepts=frozenset(concepts),
        department_id=_string_field("cases", i, item, "department_id", optional=True),
        factor=float(factor),
        peers=peers,
    )
