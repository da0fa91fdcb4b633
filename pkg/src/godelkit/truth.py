"""Strong Kleene three-valued truth."""

from __future__ import annotations

import enum
from typing import Iterable


class TruthValue3(enum.Enum):
    FALSE = 0
    TRUE = 1
    UNKNOWN = 2

    @classmethod
    def of(cls, b: bool) -> "TruthValue3":
        return cls.TRUE if b else cls.FALSE

    def __invert__(self) -> "TruthValue3":
        if self is TruthValue3.UNKNOWN:
            return self
        return TruthValue3.of(self is TruthValue3.FALSE)

    def __and__(self, other: "TruthValue3") -> "TruthValue3":
        if TruthValue3.FALSE in (self, other):
            return TruthValue3.FALSE
        if TruthValue3.UNKNOWN in (self, other):
            return TruthValue3.UNKNOWN
        return TruthValue3.TRUE

    def __or__(self, other: "TruthValue3") -> "TruthValue3":
        return ~(~self & ~other)

    def implies(self, other: "TruthValue3") -> "TruthValue3":
        return ~self | other

    def iff(self, other: "TruthValue3") -> "TruthValue3":
        return self.implies(other) & other.implies(self)

    def __bool__(self):
        raise TypeError("use `is TruthValue3.TRUE`; a three-valued result has no truthiness")

    def __str__(self) -> str:
        return {0: "False", 1: "True", 2: "Unknown"}[self.value]


TRUE = TruthValue3.TRUE
FALSE = TruthValue3.FALSE
UNKNOWN = TruthValue3.UNKNOWN


def all3(values: Iterable[TruthValue3]) -> TruthValue3:
    result = TRUE
    for v in values:
        if v is FALSE:
            return FALSE
        if v is UNKNOWN:
            result = UNKNOWN
    return result


def any3(values: Iterable[TruthValue3]) -> TruthValue3:
    result = FALSE
    for v in values:
        if v is TRUE:
            return TRUE
        if v is UNKNOWN:
            result = UNKNOWN
    return result
