"""Abstract syntax of first-order arithmetic over {0, S, +, ×, =, <}.

Terms and formulas are frozen dataclasses, so they hash, compare
structurally and can be shared freely.  Defined (pseudo) symbols appear as
``DefFun`` / ``DefPred`` nodes whose meaning lives in
:mod:`godelkit.registry`.

Variables are numbered: ``Var(3)`` prints as ``v3``.
"""

from __future__ import annotations

from dataclasses import dataclass
import sys
from functools import lru_cache
from typing import Mapping, Union


class CaptureError(ValueError):
    """Substituting a term would bind one of its free variables."""

    def __init__(self, quantifier: "Formula", variable: int):
        self.quantifier = quantifier
        self.variable = variable
        kind = "∀" if isinstance(quantifier, Forall) else "∃"
        super().__init__(f"substitution captured by quantifier {kind}v{variable}")


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Succ:
    arg: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class DefFun:
    name: str
    args: tuple["Term", ...]


Term = Union[Zero, Var, Succ, Add, Mul, DefFun]

# -- formulas ----------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class DefPred:
    name: str
    args: tuple[Term, ...]


Formula = Union[Eq, Lt, Not, And, Or, Imp, Iff, Forall, Exists, DefPred]
Expr = Union[Term, Formula]

TERM_TYPES = (Zero, Var, Succ, Add, Mul, DefFun)
FORMULA_TYPES = (Eq, Lt, Not, And, Or, Imp, Iff, Forall, Exists, DefPred)
BINARY_CONNECTIVES = (And, Or, Imp, Iff)
ZERO = Zero()


def is_term(e) -> bool:
    return isinstance(e, TERM_TYPES)


def is_formula(e) -> bool:
    return isinstance(e, FORMULA_TYPES)


# -- numerals ----------------------------------------------------------------

# Numbers up to UNARY_LIMIT are plain S…S0 chains.  Above it a numeral is
# the Horner form of the octal digits, ((d0×8)+d1)×8+…, with 8 = S⁸0 and a
# zero digit leaving out its +.  That keeps the term for a self-referential
# code at a few symbols per bit; a unary numeral would be astronomically long.
UNARY_LIMIT = 16
NUMERAL_BASE = 8

# Horner numerals for codes of a few hundred digits nest about a thousand
# deep, and every traversal here is recursive.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


def succ_chain(n: int, base: Term = ZERO) -> Term:
    t = base
    for _ in range(n):
        t = Succ(t)
    return t


@lru_cache(maxsize=4096)
def numeral(n: int) -> Term:
    """The canonical closed term denoting ``n``."""
    if n < 0:
        raise ValueError("numerals denote naturals")
    if n <= UNARY_LIMIT:
        return succ_chain(n)
    digits = []
    while n:
        n, d = divmod(n, NUMERAL_BASE)
        digits.append(d)
    base = succ_chain(NUMERAL_BASE)
    t = succ_chain(digits.pop())
    while digits:
        d = digits.pop()
        t = Mul(t, base)
        if d:
            t = Add(t, succ_chain(d))
    return t


def numeral_value(t: Term) -> int | None:
    """Value of a closed {0,S,+,×} term, or None if ``t`` is not one."""
    match t:
        case Zero():
            return 0
        case Succ():
            n = 0
            while isinstance(t, Succ):
                t, n = t.arg, n + 1
            base = numeral_value(t)
            return None if base is None else base + n
        case Add(l, r) | Mul(l, r):
            a, b = numeral_value(l), numeral_value(r)
            if a is None or b is None:
                return None
            return a + b if isinstance(t, Add) else a * b
    return None


# -- variables ---------------------------------------------------------------


def term_vars(t: Term) -> frozenset[int]:
    match t:
        case Zero():
            return frozenset()
        case Var(i):
            return frozenset((i,))
        case Succ():
            while isinstance(t, Succ):
                t = t.arg
            return term_vars(t)
        case Add(l, r) | Mul(l, r):
            return term_vars(l) | term_vars(r)
        case DefFun(_, args):
            return frozenset().union(*map(term_vars, args))
    raise TypeError(f"not a term: {t!r}")


def free_vars(f: Expr) -> frozenset[int]:
    """Indices of the variables occurring free in a formula (or term)."""
    match f:
        case Eq(l, r) | Lt(l, r):
            return term_vars(l) | term_vars(r)
        case Not(b):
            return free_vars(b)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(v, b) | Exists(v, b):
            return free_vars(b) - {v}
        case DefPred(_, args):
            return frozenset().union(*map(term_vars, args))
    return term_vars(f)


def all_vars(f: Expr) -> frozenset[int]:
    """Every variable index occurring in ``f``, free or bound."""
    match f:
        case Eq(l, r) | Lt(l, r):
            return term_vars(l) | term_vars(r)
        case Not(b):
            return all_vars(b)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return all_vars(l) | all_vars(r)
        case Forall(v, b) | Exists(v, b):
            return all_vars(b) | {v}
        case DefPred(_, args):
            return frozenset().union(*map(term_vars, args))
    return term_vars(f)


def fresh_var(*exprs: Expr) -> int:
    """Smallest variable index not used anywhere in ``exprs``."""
    used = frozenset().union(*map(all_vars, exprs))
    i = 0
    while i in used:
        i += 1
    return i


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


# -- substitution ------------------------------------------------------------


def subst_term(t: Term, mapping: Mapping[int, Term]) -> Term:
    match t:
        case Zero():
            return t
        case Var(i):
            return mapping.get(i, t)
        case Succ():
            n = 0
            while isinstance(t, Succ):
                t, n = t.arg, n + 1
            return succ_chain(n, subst_term(t, mapping))
        case Add(l, r):
            return Add(subst_term(l, mapping), subst_term(r, mapping))
        case Mul(l, r):
            return Mul(subst_term(l, mapping), subst_term(r, mapping))
        case DefFun(name, args):
            return DefFun(name, tuple(subst_term(a, mapping) for a in args))
    raise TypeError(f"not a term: {t!r}")


def substitute_all(f: Expr, mapping: Mapping[int, Term]) -> Expr:
    """Simultaneously replace free occurrences of each variable in ``mapping``.

    Raises :class:`CaptureError` rather than renaming bound variables.
    """
    if not mapping:
        return f
    match f:
        case Eq(l, r):
            return Eq(subst_term(l, mapping), subst_term(r, mapping))
        case Lt(l, r):
            return Lt(subst_term(l, mapping), subst_term(r, mapping))
        case Not(b):
            return Not(substitute_all(b, mapping))
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return type(f)(substitute_all(l, mapping), substitute_all(r, mapping))
        case Forall(v, b) | Exists(v, b):
            fv = free_vars(b)
            inner = {k: t for k, t in mapping.items() if k != v and k in fv}
            if not inner:
                return f
            if any(v in term_vars(t) for t in inner.values()):
                raise CaptureError(f, v)
            return type(f)(v, substitute_all(b, inner))
        case DefPred(name, args):
            return DefPred(name, tuple(subst_term(a, mapping) for a in args))
    return subst_term(f, mapping)


def substitute(f: Expr, v: int, t: Term) -> Expr:
    """Replace the free occurrences of variable ``v`` in ``f`` by ``t``."""
    return substitute_all(f, {v: t})


def replace_term(f: Expr, old: Term, new: Term) -> Expr:
    """Replace every occurrence of the subterm ``old`` (no capture checks)."""
    if f == old:
        return new
    match f:
        case Zero() | Var():
            return f
        case Succ(a):
            return Succ(replace_term(a, old, new))
        case Add(l, r) | Mul(l, r) | Eq(l, r) | Lt(l, r):
            return type(f)(replace_term(l, old, new), replace_term(r, old, new))
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return type(f)(replace_term(l, old, new), replace_term(r, old, new))
        case Not(b):
            return Not(replace_term(b, old, new))
        case Forall(v, b) | Exists(v, b):
            return type(f)(v, replace_term(b, old, new))
        case DefFun(name, args) | DefPred(name, args):
            return type(f)(name, tuple(replace_term(a, old, new) for a in args))
    raise TypeError(f"not an expression: {f!r}")


def subterms(f: Expr):
    """Yield every term occurring in ``f`` (outermost first)."""
    match f:
        case Zero() | Var():
            yield f
        case Succ(a):
            yield f
            yield from subterms(a)
        case Add(l, r) | Mul(l, r):
            yield f
            yield from subterms(l)
            yield from subterms(r)
        case DefFun(_, args):
            yield f
            for a in args:
                yield from subterms(a)
        case Eq(l, r) | Lt(l, r):
            yield from subterms(l)
            yield from subterms(r)
        case Not(b) | Forall(_, b) | Exists(_, b):
            yield from subterms(b)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            yield from subterms(l)
            yield from subterms(r)
        case DefPred(_, args):
            for a in args:
                yield from subterms(a)


def subformulas(f: Formula):
    """Yield ``f`` and its subformulas, breadth first."""
    queue = [f]
    while queue:
        g = queue.pop(0)
        yield g
        match g:
            case Not(b) | Forall(_, b) | Exists(_, b):
                queue.append(b)
            case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
                queue.extend((l, r))


# -- bounded quantifier shapes ----------------------------------------------


def bounded_parts(f: Formula) -> tuple[int, Term, Formula] | None:
    """Split ``(∀v<t)φ`` / ``(∃v<t)φ`` into ``(v, t, φ)``.

    The bound may not mention the quantified variable.
    """
    match f:
        case Forall(v, Imp(Lt(Var(w), t), body)) if v == w and v not in term_vars(t):
            return v, t, body
        case Exists(v, And(Lt(Var(w), t), body)) if v == w and v not in term_vars(t):
            return v, t, body
    return None


def bounded_forall(v: int, bound: Term, body: Formula) -> Formula:
    return Forall(v, Imp(Lt(Var(v), bound), body))


def bounded_exists(v: int, bound: Term, body: Formula) -> Formula:
    return Exists(v, And(Lt(Var(v), bound), body))


def size(f: Expr) -> int:
    """Node count."""
    match f:
        case Zero() | Var():
            return 1
        case Succ():
            n = 0
            while isinstance(f, Succ):
                f, n = f.arg, n + 1
            return n + size(f)
        case Add(l, r) | Mul(l, r) | Eq(l, r) | Lt(l, r):
            return 1 + size(l) + size(r)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return 1 + size(l) + size(r)
        case Not(b) | Forall(_, b) | Exists(_, b):
            return 1 + size(b)
        case DefFun(_, args) | DefPred(_, args):
            return 1 + sum(map(size, args))
    raise TypeError(f"not an expression: {f!r}")


def _node_hash(self) -> int:
    # trees produced by diagonalisation are large and live in sets and caches
    d = self.__dict__
    h = d.get("_hash")
    if h is None:
        h = hash((type(self).__name__, *d.values()))
        d["_hash"] = h
    return h


for _cls in TERM_TYPES + FORMULA_TYPES:
    _cls.__hash__ = _node_hash
del _cls
