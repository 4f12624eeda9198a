"""Exception hierarchy shared across the package.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP service can surface failures uniformly.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .validation import ValidationReport


class XelError(Exception):
    """Base class for all errors raised by this package."""

    code = "XEL_ERROR"


class NotFoundError(XelError):
    """An identifier did not resolve to any element of the log."""

    code = "NOT_FOUND"

    def __init__(self, kind: str, identifier: str):
        super().__init__(f"{kind} '{identifier}' not found")
        self.kind = kind
        self.identifier = identifier


class InvalidLogError(XelError):
    """A log failed validation with at least one error-level finding."""

    code = "VALIDATION_FAILED"

    def __init__(self, report: "ValidationReport"):
        first = report.errors[0]
        extra = len(report.errors) - 1
        suffix = f" (+{extra} more)" if extra else ""
        super().__init__(f"{first.code}: {first.message}{suffix}")
        self.report = report


class XelSyntaxError(XelError):
    """The input is not well-formed XML."""

    code = "XML_SYNTAX"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class XelSchemaError(XelError):
    """Well-formed XML that does not follow the XEL element/attribute schema."""

    code = "XML_SCHEMA"

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} (at {path})")
        self.path = path


class XesImportError(XelError):
    """An XES document is missing data the lifting rules require."""

    code = "XES_IMPORT"


class EmptyLogError(XelError):
    """Discovery was asked to run on an empty trace log."""

    code = "EMPTY_LOG"


class AlphabetTooLargeError(XelError):
    """The trace alphabet exceeds the configured miner limit."""

    code = "ALPHABET_TOO_LARGE"

    def __init__(self, size: int, limit: int):
        super().__init__(f"alphabet has {size} labels, miner limit is {limit}")
        self.size = size
        self.limit = limit
