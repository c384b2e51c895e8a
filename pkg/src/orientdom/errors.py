"""Exception hierarchy shared by every orientdom module."""

from __future__ import annotations


class OrientDomError(Exception):
    """Base class for all orientdom errors."""


class InvalidEdge(OrientDomError):
    pass


class DuplicateEdge(OrientDomError):
    pass


class OutOfRange(OrientDomError):
    pass


class ParseError(OrientDomError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class InvalidFamilyParams(OrientDomError):
    pass


class TooLarge(OrientDomError):
    pass


class DirLengthMismatch(OrientDomError):
    pass


class BudgetExceeded(OrientDomError):
    """Raised when a search budget runs out.

    ``partial`` carries whatever was computed before the budget ran out
    (a structural profile, an extremum report flagged as non-exact, ...).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NotValidOrientation(OrientDomError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has in-degree 0")
        self.vertex = vertex


class NotInSet(OrientDomError):
    pass


class EmptyByTreeComponent(OrientDomError):
    """A component is a tree, so no orientation gives every vertex an in-neighbor."""


# the optimizer reports the same condition under this name
NoValidOrientation = EmptyByTreeComponent


class TooManyOrientations(OrientDomError):
    pass


class NoCycle(OrientDomError):
    pass


class NoTheoremApplies(OrientDomError):
    pass


class UnknownCheck(OrientDomError):
    pass
