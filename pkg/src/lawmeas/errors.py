"""Exception hierarchy shared by every kernel module."""


class LawmeasError(Exception):
    """Base class for all kernel errors."""


class CarrierMismatch(LawmeasError, ValueError):
    """Two objects that must live on the same carrier do not."""


class CapExceeded(LawmeasError):
    """An enumeration would exceed its configured size limit."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class PreconditionError(LawmeasError, ValueError):
    """An operation was called outside its documented precondition."""


class MissingOpError(LawmeasError, KeyError):
    """An algebra lacks a table for an operation of the theory."""

    def __str__(self):
        return self.args[0] if self.args else "missing operation table"


class ClosureError(LawmeasError):
    """A lifted operation produced a function outside the function space."""


class NoConstantsError(LawmeasError):
    """An empty target carrier cannot interpret constant symbols."""


class UnknownTheory(LawmeasError, KeyError):
    def __str__(self):
        return f"unknown builtin theory {self.args[0]!r}"


class ParseError(LawmeasError):
    """Theory DSL diagnostic with a 1-based source position."""

    def __init__(self, kind, message, line, column):
        super().__init__(f"line {line}, column {column}: {kind}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column
