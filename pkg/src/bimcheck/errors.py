"""Exception types shared across the package.

Every error message is written to stand on its own, because loader and
rule-check errors get quoted verbatim as feedback in the script-repair
loop.
"""

from __future__ import annotations


class BimcheckError(Exception):
    """Base class for all bimcheck errors."""


class SchemaError(BimcheckError):
    """A model or config file violates the expected schema.

    ``path`` is a JSON-ish pointer into the offending document, e.g.
    ``elements[3].params.width.unit``.
    """

    def __init__(self, path: str, problem: str):
        self.path = path
        self.problem = problem
        super().__init__(f"{path}: {problem}" if path else problem)


class DuplicateIdError(SchemaError):
    def __init__(self, path: str, kind: str, id_: int):
        self.id = id_
        super().__init__(path, f"duplicate {kind} id {id_}")


class DanglingReferenceError(SchemaError):
    def __init__(self, path: str, level_id: int):
        self.level_id = level_id
        super().__init__(path, f"level_id {level_id} does not match any declared level")


class GeometryError(BimcheckError):
    """Degenerate or unusable geometry (too few vertices, self-intersection, ...)."""


class MissingParamError(BimcheckError):
    """An element lacks a parameter a rule or script asked for."""

    def __init__(self, element_id: int, name: str):
        self.element_id = element_id
        self.name = name
        super().__init__(f"element {element_id} has no parameter {name!r}")


class UnknownRuleError(BimcheckError):
    def __init__(self, rule_id: int):
        self.rule_id = rule_id
        super().__init__(f"unknown rule id {rule_id}; valid rules are 1..12")


class ProviderError(BimcheckError):
    """A completion provider failed (network, auth, timeout, malformed reply)."""


class EmptyCompletionError(ProviderError):
    def __init__(self) -> None:
        super().__init__("provider returned an empty completion")
