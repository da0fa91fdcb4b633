"""Finite propositional versions of the paradox families.

``n`` speakers each assert one sentence.  An assignment of truth values is a
model when every speaker's value matches what their sentence says about the
others.  The number of models sorts a configuration into paradoxical (none),
determinate (exactly one) or indeterminate (several).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

MAX_SPEAKERS = 24
_CHUNK = 1 << 16


class ParadoxKind(enum.Enum):
    SOMEONE_WRONG = 1       # "at least one speaker says something false"
    SOMEONE_ELSE_WRONG = 2  # "at least one other speaker says something false"
    AT_LEAST_K = 3          # speaker k: "at least k speakers say something false"

    @property
    def label(self) -> str:
        return {1: "SomeoneWrong", 2: "SomeoneElseWrong", 3: "AtLeastK"}[self.value]

    @classmethod
    def parse(cls, s) -> "ParadoxKind":
        if isinstance(s, cls):
            return s
        for k in cls:
            if str(s) in (str(k.value), k.label, k.name):
                return k
        raise ValueError(f"unknown paradox kind {s!r}")


PARADOXICAL = "paradoxical"
DETERMINATE = "determinate"
INDETERMINATE = "indeterminate"


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_SPEAKERS:
        raise ValueError(f"n must lie in 1..{MAX_SPEAKERS}, got {n}")


def _required(kind: ParadoxKind, bits: np.ndarray) -> np.ndarray:
    """What each speaker's sentence says, given everyone's values."""
    n = bits.shape[1]
    false_count = n - bits.sum(axis=1, dtype=np.int64)
    if kind is ParadoxKind.SOMEONE_WRONG:
        return np.broadcast_to((false_count >= 1)[:, None], bits.shape)
    if kind is ParadoxKind.SOMEONE_ELSE_WRONG:
        others = false_count[:, None] - (~bits)
        return others >= 1
    return false_count[:, None] >= np.arange(1, n + 1)


def consistent_assignments(kind, n: int) -> list[tuple[bool, ...]]:
    """All models, in lexicographic order with False before True."""
    kind = ParadoxKind.parse(kind)
    _check_n(n)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    found = []
    for start in range(0, 1 << n, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        bits = ((idx[:, None] >> shifts) & 1).astype(bool)
        ok = (bits == _required(kind, bits)).all(axis=1)
        found.extend(tuple(bool(b) for b in row) for row in bits[ok])
    return found


def classify_count(models: int) -> str:
    if models == 0:
        return PARADOXICAL
    return DETERMINATE if models == 1 else INDETERMINATE


@dataclass(frozen=True)
class LabResult:
    kind: ParadoxKind
    n: int
    models: tuple[tuple[bool, ...], ...]

    @property
    def count(self) -> int:
        return len(self.models)

    @property
    def classification(self) -> str:
        return classify_count(self.count)

    def format(self, table: bool = False) -> str:
        lines = [f"kind={self.kind.label} n={self.n} models={self.count} classification={self.classification}"]
        if table:
            lines += [" ".join("T" if b else "F" for b in m) for m in self.models]
        return "\n".join(lines) + "\n"


def run(kind, n: int) -> LabResult:
    kind = ParadoxKind.parse(kind)
    return LabResult(kind, n, tuple(consistent_assignments(kind, n)))


def classify_paradox(kind, n: int) -> str:
    return run(kind, n).classification
