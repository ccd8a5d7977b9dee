"""Error channels and the small verdict record shared by every checker."""

from dataclasses import dataclass, field
from typing import Any, Optional


class InputError(ValueError):
    """Malformed or invalid input (CLI exit code 2)."""


class Inconclusive(RuntimeError):
    """A cap-bounded computation could not decide (CLI exit code 3)."""


class ExceedsCap:
    """Sentinel for dimensions that did not terminate within a cap."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "exceeds cap"

    def __str__(self):
        return "exceeds cap"

    def __reduce__(self):
        return (ExceedsCap, ())


EXCEEDS = ExceedsCap()


def is_finite(d) -> bool:
    return d is not EXCEEDS


@dataclass
class Decision:
    """Boolean outcome plus optional witness/certificate payloads."""

    holds: bool
    witness: Optional[Any] = None
    certificate: Optional[Any] = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.holds)
