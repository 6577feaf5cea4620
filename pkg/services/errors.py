"""Exception types raised by the service layer."""

from __future__ import annotations

from typing import Iterable, Tuple


class InvalidInputError(ValueError):
    """A caller broke an operation's precondition."""


class ConsistencyError(RuntimeError):
    """An exact computation produced a value that cannot be right."""


class RefusalError(RuntimeError):
    """The requested computation is beyond the configured caps."""


class TemplateError(ValueError):
    """A family template does not instantiate to an integer polynomial."""


class InconsistentCountsError(ValueError):
    """Point counts that no abelian-variety zeta function can produce."""


class PolyExprSyntaxError(ValueError):
    def __init__(self, text: str, offset: int, expected: Iterable[str]) -> None:
        self.text = text
        self.offset = offset
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        super().__init__(
            f"syntax error at offset {offset}: expected one of {', '.join(self.expected)}"
        )
