"""Exception hierarchy.

Three families matter to callers (and to the CLI exit-code contract):
input/parse problems, violated operation preconditions, and internal
defects that indicate a bug rather than bad input.
"""

from __future__ import annotations


class LimattnError(Exception):
    """Base class for all package errors."""


class ParseError(LimattnError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class PreconditionError(LimattnError):
    """An operation was called outside its stated precondition."""


class CyclicRelationError(PreconditionError):
    """Relation has a directed cycle where an acyclic one is required."""


class EmptyMaximaError(PreconditionError):
    """A menu has no maximal element under the given relation."""


class CyclicShortlistError(PreconditionError):
    """Shortlist dominance relation leaves some menu without maxima."""


class NotASwitchError(PreconditionError):
    """The given menu pair is not a switch of the choice function."""


class MissingOrderError(PreconditionError):
    """Filter check requires a companion preference order, none given."""


class NotInClassError(PreconditionError):
    """Choice function is not in the class the operation requires."""

    def __init__(self, class_tag: str, message: str | None = None):
        self.class_tag = class_tag
        super().__init__(message or f"choice function is not in class {class_tag!r}")


class NotRationalizableError(PreconditionError):
    """Correspondence fails a contraction/expansion axiom."""

    def __init__(self, axiom: str):
        self.axiom = axiom
        super().__init__(f"correspondence violates axiom {axiom}")


class SizeTooLargeError(PreconditionError):
    """Ground set too large for an exhaustive enumeration path."""


class InternalDefectError(LimattnError):
    """A guaranteed-to-succeed construction failed; this is a bug."""


class ConstructionExhaustedError(InternalDefectError):
    """Search for a guaranteed-existing witness exhausted its space."""


class VerificationFailedError(InternalDefectError):
    """A construction verified false against its defining equation."""
