"""Exception hierarchy.

Input problems derive from ``InputError`` and resource caps from
``ResourceError``; the CLI maps these to exit codes 2 and 3.
"""

from __future__ import annotations


class ReesCommuteError(Exception):
    """Base class for every error raised by this package."""

    def to_json(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class InputError(ReesCommuteError, ValueError):
    pass


class ResourceError(ReesCommuteError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotAssociative(InputError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")

    def to_json(self) -> dict:
        return {**super().to_json(), "triple": list(self.triple)}


class DuplicateLabel(InputError):
    pass


class NoIdentity(InputError):
    pass


class MissingInverse(InputError):
    pass


class UnknownSpec(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class CommutativeInput(InputError):
    pass


class EmptyGraph(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class SizeLimitExceeded(ResourceError):
    pass


class BudgetExceeded(ResourceError):
    pass


class OutputBudgetExceeded(ResourceError):
    pass
