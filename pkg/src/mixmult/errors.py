"""Exception hierarchy.

Every error carries a ``category`` used by the command line front end when it
prints ``error: <category>: <message>``.
"""


class MixMultError(Exception):
    category = "internal"


class ParseError(MixMultError):
    category = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class PreconditionError(MixMultError, ValueError):
    category = "precondition"


class RingMismatchError(PreconditionError):
    pass


class ResourceError(MixMultError):
    category = "resource"


class InternalInconsistency(MixMultError):
    category = "internal"
