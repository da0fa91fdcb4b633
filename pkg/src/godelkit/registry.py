"""Defined symbols ("pterms") with executable meaning.

Each entry pairs an object-language function or predicate symbol with a
meta-level oracle on naturals, a syntactic class, and optionally a defining
formula in terms of earlier symbols.  Parameters of a definition are the
variables ``v0, v1, …`` in argument order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Iterator

from .syntax import (
    And,
    DefFun,
    DefPred,
    Eq,
    Exists,
    Formula,
    Forall,
    Iff,
    Imp,
    Lt,
    Not,
    Or,
    Var,
    all_vars,
    substitute_all,
    term_vars,
)
from .truth import TRUE, UNKNOWN

DELTA0 = "Delta0"
SIGMA1 = "Sigma1"
OPAQUE = "Opaque"

DEFAULT_PROV_BUDGET = 2000


class OracleDomainError(ValueError):
    """A partial oracle was applied outside its domain."""


@dataclass(frozen=True)
class DefinedSymbol:
    name: str
    kind: str  # "function" | "predicate"
    arity: int
    oracle: Callable
    classification: str = DELTA0
    expansion: Formula | None = None
    budgeted: bool = False
    doc: str = ""


class Registry:
    """Ordered, name-indexed collection of defined symbols."""

    def __init__(self, symbols=()):
        self._symbols: list[DefinedSymbol] = []
        self._index: dict[str, int] = {}
        for s in symbols:
            self.add(s)

    def add(self, sym: DefinedSymbol) -> None:
        if sym.name in self._index:
            raise ValueError(f"{sym.name} is already registered")
        self._index[sym.name] = len(self._symbols)
        self._symbols.append(sym)

    def _replace(self, sym: DefinedSymbol) -> None:
        self._symbols[self._index[sym.name]] = sym

    def get(self, name: str) -> DefinedSymbol | None:
        i = self._index.get(name)
        return None if i is None else self._symbols[i]

    def __getitem__(self, name: str) -> DefinedSymbol:
        sym = self.get(name)
        if sym is None:
            raise KeyError(name)
        return sym

    def position(self, name: str) -> int:
        return self._index[name]

    def at(self, i: int) -> DefinedSymbol:
        return self._symbols[i]

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[DefinedSymbol]:
        return iter(self._symbols)

    def table(self) -> list[dict]:
        from .coding import DEFINED_BASE

        return [
            {
                "name": s.name,
                "kind": s.kind,
                "arity": s.arity,
                "classification": s.classification,
                "code": DEFINED_BASE + i,
                "expansion": s.expansion is not None,
            }
            for i, s in enumerate(self._symbols)
        ]


# -- oracles -----------------------------------------------------------------


def _code(x):
    from .coding import is_code

    return is_code(x)


def _length(x):
    from .coding import is_code, seq_len

    # total, like every pterm: 0 off the domain
    return seq_len(x) if is_code(x) else 0


def _element(x, k):
    from .coding import is_code, seq_decode

    if not is_code(x):
        return 0
    seq = seq_decode(x)
    return seq[k] if k < len(seq) else 0


def _neg(x):
    from .coding import CodingError, meta_neg
    from .grammar import ParseError

    try:
        return meta_neg(x)
    except (CodingError, ParseError) as exc:
        raise OracleDomainError(f"Neg({x}): {exc}") from None


def _subs(x, v, t):
    from .coding import CodingError, meta_subs
    from .grammar import ParseError
    from .syntax import CaptureError

    try:
        return meta_subs(x, v, t)
    except (CodingError, ParseError, CaptureError) as exc:
        raise OracleDomainError(f"Subs: {exc}") from None


def _num(n):
    from .coding import num_code

    return num_code(n)


def _hetseq(x):
    from .coding import is_code, seq_decode

    if not is_code(x):
        return False
    seq = seq_decode(x)
    return len(set(seq)) == len(seq)


def _ele(x, y):
    from .coding import is_code, seq_decode

    return is_code(y) and x in seq_decode(y)


def _prf(p, x):
    from .kernel import proves

    return proves(p, x)


def _prov(x, budget=DEFAULT_PROV_BUDGET):
    from .coding import CodingError
    from .grammar import ParseError
    from .kernel import search_cached

    try:
        from .coding import decode_formula

        goal = decode_formula(x)
    except (CodingError, ParseError):
        return UNKNOWN
    return TRUE if search_cached(goal, budget) is not None else UNKNOWN


# -- the standard registry ---------------------------------------------------

_EXPANSIONS = {
    "HetSeq": "(Code(v0)∧(∀v1<l(v0))(∀v2<l(v0))(¬(v1=v2)→¬(Dec(v0,v1)=Dec(v0,v2))))",
    "Ele": "(Code(v1)∧(∃v2<l(v1))(Dec(v1,v2)=v0))",
    "Prov": "∃v1 Prf(v1,v0)",
}


def register_standard_symbols() -> Registry:
    """Build the registry of the coding apparatus and provability symbols."""
    reg = Registry(
        [
            DefinedSymbol("Code", "predicate", 1, _code, doc="x is a sequence code"),
            DefinedSymbol("l", "function", 1, _length, doc="length of the coded sequence"),
            DefinedSymbol("Dec", "function", 2, _element, doc="Dec(x,k): k-th element, from 0"),
            DefinedSymbol("Neg", "function", 1, _neg, doc="⌜φ⌝ ↦ ⌜¬φ⌝"),
            DefinedSymbol("Subs", "function", 3, _subs, doc="⌜φ⌝,⌜v⌝,⌜t⌝ ↦ ⌜φ(t/v)⌝"),
            DefinedSymbol("Num", "function", 1, _num, doc="n ↦ ⌜numeral of n⌝"),
            DefinedSymbol("HetSeq", "predicate", 1, _hetseq, doc="code of a repetition-free sequence"),
            DefinedSymbol("Ele", "predicate", 2, _ele, doc="x is an element of the sequence y"),
            DefinedSymbol("Prf", "predicate", 2, _prf, doc="p codes a kernel proof of the formula x"),
            DefinedSymbol(
                "Prov", "predicate", 1, _prov, SIGMA1, budgeted=True, doc="some proof of x exists"
            ),
        ]
    )
    from .grammar import parse

    for name, text in _EXPANSIONS.items():
        reg._replace(replace(reg[name], expansion=parse(text, reg)))
    return reg


@lru_cache(maxsize=1)
def standard_registry() -> Registry:
    return register_standard_symbols()


def eval_defined(name: str, args, budget: int = DEFAULT_PROV_BUDGET, registry: Registry | None = None):
    """Apply a defined symbol's oracle to natural-number arguments.

    Δ0 symbols answer exactly; ``Prov`` answers ``TRUE`` or ``UNKNOWN``.
    """
    registry = registry or standard_registry()
    sym = registry.get(name)
    if sym is None:
        raise KeyError(f"unknown defined symbol {name!r}")
    args = tuple(args)
    if len(args) != sym.arity:
        raise TypeError(f"{name} takes {sym.arity} argument(s), got {len(args)}")
    if sym.budgeted:
        return sym.oracle(*args, budget=budget)
    return sym.oracle(*args)


# -- definitional expansion ------------------------------------------------


def _rename_bound(f: Formula, avoid: frozenset[int]) -> Formula:
    """Alpha-rename bound variables of ``f`` that fall in ``avoid``."""
    taken = set(all_vars(f)) | set(avoid)

    def walk(g, ren):
        match g:
            case Forall(v, b) | Exists(v, b):
                if v in avoid:
                    w = 0
                    while w in taken:
                        w += 1
                    taken.add(w)
                    return type(g)(w, walk(b, {**ren, v: Var(w)}))
                return type(g)(v, walk(b, {k: t for k, t in ren.items() if k != v}))
            case Not(b):
                return Not(walk(b, ren))
            case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
                return type(g)(walk(l, ren), walk(r, ren))
        return substitute_all(g, ren)

    return walk(f, {})


def instantiate_definition(sym: DefinedSymbol, args) -> Formula:
    params = range(sym.arity)
    arg_vars = frozenset().union(*map(term_vars, args))
    body = _rename_bound(sym.expansion, arg_vars)
    return substitute_all(body, dict(zip(params, args)))


def expand_definition(f: Formula, registry: Registry | None = None) -> Formula:
    """Replace each defined atom that has a registered definition by its body.

    One step only: atoms inside the inserted bodies are left alone.
    """
    registry = registry or standard_registry()
    match f:
        case DefPred(name, args):
            sym = registry[name]
            if sym.expansion is None:
                return f
            return instantiate_definition(sym, args)
        case Not(b):
            return Not(expand_definition(b, registry))
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return type(f)(expand_definition(l, registry), expand_definition(r, registry))
        case Forall(v, b) | Exists(v, b):
            return type(f)(v, expand_definition(b, registry))
    return f


__all__ = [
    "DELTA0",
    "SIGMA1",
    "OPAQUE",
    "DefinedSymbol",
    "OracleDomainError",
    "Registry",
    "eval_defined",
    "expand_definition",
    "register_standard_symbols",
    "standard_registry",
]
