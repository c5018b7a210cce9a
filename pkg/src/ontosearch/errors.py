"""Exception types shared across the knowledge base, pipeline, and eval harness."""

from __future__ import annotations


class ParseError(ValueError):
    """A KB document is structurally malformed: bad JSON, wrong field shapes,
    missing or unknown top-level keys."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """A KB document parsed but breaks one or more invariants.

    Carries every violation found, not just the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{len(self.violations)} violation(s): {detail}")


class UnknownClass(KeyError):
    """A class-hierarchy query named a class that is not declared in the KB."""


class EmptyQuery(ValueError):
    """Query text is blank after trimming."""


class EmptyQueryConcepts(ValueError):
    """Similarity was asked for a semantic query with no mapped concepts."""


class CorpusError(ValueError):
    """An evaluation corpus references ids that do not resolve against the KB.

    All problems are collected before any query runs.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        detail = "; ".join(self.problems)
        super().__init__(f"{len(self.problems)} corpus problem(s): {detail}")
