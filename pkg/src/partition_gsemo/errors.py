"""
Exception hierarchy for partition_gsemo.

Domain refusals derive from PartitionGsemoError and map to exit code 3 in the CLI.
Structural misuse (wrong lengths, violated preconditions) raises ValueError subclasses.
"""

from pathlib import Path
from typing import Iterable, Optional, Union


class PartitionGsemoError(Exception):
    """Base class for refusals raised by this package."""


class InstanceValidationError(PartitionGsemoError):
    """An instance, constraint or configuration violates its invariants."""


class InstanceParseError(InstanceValidationError):
    """
    A file could not be parsed.

    Carries the path, 1-based line number and field name when known.
    """

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.path = path
        self.line = line
        self.field = field

        location = []
        if path is not None:
            location.append(str(path))
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")

        prefix = ", ".join(location)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class EnumerationGuardError(PartitionGsemoError):
    """Exhaustive enumeration refused because the ground set is too large."""

    def __init__(self, operation: str, n: int, limit: int):
        self.operation = operation
        self.n = n
        self.limit = limit
        super().__init__(
            f"{operation} enumerates 2^n subsets and is limited to n <= {limit}, got n = {n}"
        )


class NegativeOracleValueError(PartitionGsemoError):
    """The objective oracle returned a negative value; objectives must be non-negative."""


class InsufficientDataError(PartitionGsemoError):
    """A statistical test was given too few usable observations."""


class MissingPairsError(PartitionGsemoError):
    """Paired data is missing for some instance ids."""

    def __init__(self, missing: Iterable[str]):
        self.missing = sorted(missing)
        super().__init__(f"Missing paired values for instances: {', '.join(self.missing)}")


class EmptyStoreError(PartitionGsemoError):
    """A report was requested from a result store without records."""


class LengthMismatchError(ValueError):
    """A solution does not match the ground-set size it is used with."""
