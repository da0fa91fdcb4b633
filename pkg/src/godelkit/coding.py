"""Sequence codes and Gödel numbers.

A finite sequence of naturals is coded as a decimal numeral: every element is
written in base 8 with each octal digit ``d`` shown as the decimal digit
``d+1``, and each element is closed by a ``9``.  The empty sequence is 0.

>>> seq_encode([3, 5])
4969
>>> seq_decode(229)
[9]

The Gödel number of an expression is the code of the symbol numbers of its
canonical printing (layout omitted).
"""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Iterable

from .grammar import Name, parse_tokens, tokens
from .syntax import Expr, Not, Var, is_formula, is_term, numeral, substitute

# Codes of realistic formulas run to tens of thousands of decimal digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

SYMBOL_CODES: dict[str, int] = {
    "0": 1,
    "S": 2,
    "+": 3,
    "×": 4,
    "=": 5,
    "¬": 6,
    "∧": 7,
    "∨": 8,
    "→": 9,
    "↔": 10,
    "∀": 11,
    "∃": 12,
    "(": 13,
    ")": 14,
    "<": 15,
}
_CODE_SYMBOLS = {v: k for k, v in SYMBOL_CODES.items()}
VAR_BASE = 16
DEFINED_BASE = 1000
MAX_VAR = DEFINED_BASE - VAR_BASE - 1

_TO_DIGITS = str.maketrans("01234567", "12345678")
_FROM_DIGITS = str.maketrans("12345678", "01234567")


class CodingError(ValueError):
    pass


class NotACodeError(CodingError):
    pass


class SymbolCodeError(CodingError):
    """A code element that names no symbol."""


class NotAFormulaError(CodingError):
    pass


def _registry(registry):
    if registry is None:
        from .registry import standard_registry

        return standard_registry()
    return registry


# -- sequences ---------------------------------------------------------------


def seq_encode(seq: Iterable[int]) -> int:
    parts = []
    for x in seq:
        if x < 0:
            raise ValueError("sequence elements must be naturals")
        parts.append(format(x, "o").translate(_TO_DIGITS))
        parts.append("9")
    return int("".join(parts)) if parts else 0


def _runs(n: int) -> list[str] | None:
    if n < 0:
        return None
    if n == 0:
        return []
    s = str(n)
    if s[-1] != "9" or "0" in s:
        return None
    runs = s[:-1].split("9")
    for r in runs:
        # an empty run, or an octal numeral with a leading zero, is never emitted
        if not r or (len(r) > 1 and r[0] == "1"):
            return None
    return runs


def is_code(n: int) -> bool:
    """True iff ``n`` is the code of some finite sequence."""
    return _runs(n) is not None


def seq_decode(c: int) -> list[int]:
    runs = _runs(c)
    if runs is None:
        raise NotACodeError(f"{c} is not a sequence code")
    return [int(r.translate(_FROM_DIGITS), 8) for r in runs]


def seq_len(c: int) -> int:
    if not is_code(c):
        raise NotACodeError(f"{c} is not a sequence code")
    return str(c).count("9") if c else 0


def seq_at(c: int, k: int) -> int:
    """The ``k``-th element (from 0) of the sequence coded by ``c``."""
    seq = seq_decode(c)
    if not 0 <= k < len(seq):
        raise IndexError(f"index {k} out of range for a sequence of length {len(seq)}")
    return seq[k]


# -- symbols -----------------------------------------------------------------


def symbol_code(tok, registry=None) -> int:
    if isinstance(tok, Var):
        if tok.index > MAX_VAR:
            raise CodingError(f"variable v{tok.index} exceeds the coded range")
        return VAR_BASE + tok.index
    if isinstance(tok, Name):
        return DEFINED_BASE + _registry(registry).position(tok.text)
    return SYMBOL_CODES[tok]


def code_symbol(k: int, registry=None):
    if k in _CODE_SYMBOLS:
        return _CODE_SYMBOLS[k]
    if VAR_BASE <= k < DEFINED_BASE:
        return Var(k - VAR_BASE)
    registry = _registry(registry)
    if DEFINED_BASE <= k < DEFINED_BASE + len(registry):
        return Name(registry.at(k - DEFINED_BASE).name)
    raise SymbolCodeError(f"{k} is not a symbol number")


def symbol_sequence(e: Expr, registry=None) -> list[int]:
    return [symbol_code(t, registry) for t in tokens(e, layout=False)]


def godel_encode(e: Expr, registry=None) -> int:
    """Gödel number of a term or formula."""
    return seq_encode(symbol_sequence(e, registry))


def godel_decode(c: int, registry=None) -> Expr:
    if registry is None:
        return _decode_standard(c)
    return _decode(c, registry)


def _decode(c, registry):
    toks = [code_symbol(k, registry) for k in seq_decode(c)]
    if not toks:
        raise CodingError("the empty sequence is not an expression")
    return parse_tokens(toks, registry)


@lru_cache(maxsize=1024)
def _decode_standard(c: int) -> Expr:
    return _decode(c, _registry(None))


# -- arithmetised syntax ---------------------------------------------------


def decode_formula(c: int, registry=None):
    e = godel_decode(c, registry)
    if not is_formula(e):
        raise NotAFormulaError(f"{c} codes a term, not a formula")
    return e


def decode_term(c: int, registry=None):
    e = godel_decode(c, registry)
    if not is_term(e):
        raise CodingError(f"{c} codes a formula, not a term")
    return e


def meta_neg(c: int, registry=None) -> int:
    """``⌜φ⌝ ↦ ⌜¬φ⌝``."""
    return godel_encode(Not(decode_formula(c, registry)), registry)


def meta_subs(c: int, v: int, t: int, registry=None) -> int:
    """``(⌜φ⌝, ⌜vᵢ⌝, ⌜t⌝) ↦ ⌜φ(t/vᵢ)⌝``."""
    f = decode_formula(c, registry)
    var = decode_term(v, registry)
    if not isinstance(var, Var):
        raise CodingError(f"{v} does not code a variable")
    term = decode_term(t, registry)
    return godel_encode(substitute(f, var.index, term), registry)


def num_code(n: int) -> int:
    """Gödel number of the numeral for ``n``."""
    return godel_encode(numeral(n))


def var_code(i: int) -> int:
    return godel_encode(Var(i))
