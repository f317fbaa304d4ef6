"""Exception hierarchy shared by every orichrom module."""

from __future__ import annotations


class OrichromError(Exception):
    """Base class for all library errors."""


class InvalidGraphError(OrichromError, ValueError):
    """A graph value violates its structural invariants."""


class AntisymmetryError(InvalidGraphError):
    """An oriented graph would contain both (u, v) and (v, u)."""


class CapExceededError(OrichromError):
    """An exhaustive search was refused because its input exceeds a configured cap."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} = {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class FormatError(OrichromError, ValueError):
    """Malformed graph6 / digraph6 / family text."""


class ConstructionError(OrichromError):
    """Inputs to a constructive homomorphism do not satisfy its premises."""
