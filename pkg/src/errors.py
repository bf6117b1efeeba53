"""Exception hierarchy shared by every simulator module.

Parameter-style errors subclass ValueError so they can be raised from pydantic
validators and still surface as validation failures.
"""

from pathlib import Path


class CovertSimError(Exception):
    """Base class for all simulator errors."""


class InvalidParameterError(CovertSimError, ValueError):
    """A numeric or categorical parameter is outside its allowed domain."""


class InvalidInputError(CovertSimError, ValueError):
    """An operation received input it cannot act on (e.g. an empty signal list)."""


class InvalidConfigurationError(CovertSimError, ValueError):
    """Components were combined in a way that has no meaning."""


class InsufficientSampleError(CovertSimError, ValueError):
    """An estimator has no observations in a required pool."""


class ConstructionError(CovertSimError, RuntimeError):
    """A randomized construction exhausted its retry budget."""


class EdgeListParseError(CovertSimError, ValueError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, path: Path | str, line_number: int, line: str, reason: str):
        self.path = Path(path)
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"{self.path}:{line_number}: {reason}: {line.strip()!r}")


class ParameterRangeWarning(UserWarning):
    """A parameter lies outside the range a theoretical guarantee covers."""
