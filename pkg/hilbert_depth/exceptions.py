"""
Error hierarchy for hilbert_depth.

Every error raised on purpose by the library derives from HilbertDepthError,
so callers (the CLI in particular) can map failures to exit codes without
catching unrelated exceptions.
"""

from __future__ import annotations

from typing import Optional


class HilbertDepthError(Exception):
    """Base class for all library errors."""


class DomainError(HilbertDepthError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class CapacityError(HilbertDepthError):
    """The request exceeds a configured scale cap (enumeration, oracle size)."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class IdealParseError(HilbertDepthError):
    """An ideal file could not be parsed."""

    def __init__(self, message: str, line_number: int, line: Optional[str] = None):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
        self.line = line


class ConfigurationError(HilbertDepthError):
    """Invalid settings or an invalid combination of command-line flags."""


class SamplingError(HilbertDepthError):
    """Random ideal sampling gave up after its attempt budget."""


__all__ = [
    "HilbertDepthError",
    "DomainError",
    "CapacityError",
    "IdealParseError",
    "ConfigurationError",
    "SamplingError",
]
