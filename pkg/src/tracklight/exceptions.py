"""Exception types raised across the package.

Plain argument problems raise ``ValueError`` and out-of-range indices raise
``IndexError``; the classes below cover the remaining structured failures.
"""


class FormatError(ValueError):
    """Input text does not follow the expected file grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StateError(RuntimeError):
    """A model was queried before ``fit`` was called."""


class IntegrityError(Exception):
    """A downloaded or cached file does not match its registered SHA-256 digest."""


class TransferError(OSError):
    """A dataset file could not be downloaded."""
