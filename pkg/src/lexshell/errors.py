"""Exception hierarchy shared by every engine."""

from __future__ import annotations


class LexshellError(Exception):
    """Base class for all errors raised by lexshell."""


class ParseError(LexshellError, ValueError):
    pass


class CycleError(LexshellError, ValueError):
    pass


class NonCoverError(LexshellError, ValueError):
    pass


class NotBoundedError(LexshellError, ValueError):
    pass


class NotComparableError(LexshellError, ValueError):
    pass


class UnknownElementError(LexshellError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class RedundantFacetError(LexshellError, ValueError):
    pass


class EmptyInputError(LexshellError, ValueError):
    pass


class EmptyPosetError(LexshellError, ValueError):
    pass


class NotAPermutationError(LexshellError, ValueError):
    pass


class NotAFacetError(LexshellError, ValueError):
    pass


class NotShellableError(LexshellError, ValueError):
    pass


class IncompleteLabelingError(LexshellError, ValueError):
    pass


class MalformedCertificateError(LexshellError, ValueError):
    pass


class ValidationError(LexshellError, ValueError):
    """Raised when bundled or user data fails a structural check.

    ``prop`` names the property that failed.
    """

    def __init__(self, prop: str, detail: str = "") -> None:
        self.prop = prop
        self.detail = detail
        super().__init__(f"{prop}: {detail}" if detail else prop)


class RecipeInapplicableError(LexshellError, ValueError):
    pass


class ResourceLimitError(LexshellError, RuntimeError):
    """The search node budget ran out before the search finished."""


DEFAULT_LIMIT = 10**7


class Budget:
    """Counts search nodes and raises ResourceLimitError once the limit is hit."""

    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None) -> None:
        self.limit = DEFAULT_LIMIT if limit is None else int(limit)
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise ResourceLimitError(f"node budget of {self.limit} exhausted")


def as_budget(limit: int | Budget | None) -> Budget:
    if isinstance(limit, Budget):
        return limit
    return Budget(limit)
