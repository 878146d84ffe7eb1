"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: usage errors exit 1, group file
errors exit 2, domain errors exit 3, internal consistency failures exit 4.
"""


class BlockfunctorError(Exception):
    """Base class for every error raised by this package."""


class GroupFileError(BlockfunctorError):
    """Malformed group description file."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class DomainError(BlockfunctorError):
    """Input violates a mathematical precondition of an operation."""


class SizeBoundError(DomainError):
    """Requested computation exceeds the configured order bound."""


class InternalCheckError(BlockfunctorError):
    """An internal consistency check or a verified theorem failed."""


class UsageError(BlockfunctorError):
    """Bad command line invocation."""
