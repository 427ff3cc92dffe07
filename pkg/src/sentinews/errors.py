"""Shared exception types."""


class ConfigError(Exception):
    """Invalid configuration (bad flags, bad JSON, invalid combinations)."""


class DataError(Exception):
    """Problem with input data (schema, parse, empty dataset)."""


class SchemaError(DataError):
    """A required column or field is missing."""


class ParseError(DataError):
    """A line or row could not be parsed; carries its 1-based line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EmptyDatasetError(DataError):
    """No usable rows after loading."""
