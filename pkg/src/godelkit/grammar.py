"""Lexer, parser and canonical printer for the formula language.

The canonical form is fully parenthesised::

    (0=0)   ¬(0=0)   ((v0+S0)=v1)   ∀v0 (v0=v0)   (∀v1<S0)(v1=0)   l(v0)

Input also accepts the ASCII aliases ``not and or -> <-> forall exists * <=
!=`` and the notations ``s≤t`` (read as ``s<St``) and ``s≠t`` (read as
``¬(s=t)``).

The printer and the Gödel coder share one token stream (:func:`tokens`).  The
coder drops the layout tokens (spaces and commas); the parser can read either
form because every defined symbol has a fixed arity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .syntax import (
    Add,
    And,
    DefFun,
    DefPred,
    Eq,
    Exists,
    Expr,
    Forall,
    Formula,
    Iff,
    Imp,
    Lt,
    Mul,
    Not,
    Or,
    Succ,
    Term,
    Var,
    Zero,
    ZERO,
    bounded_exists,
    bounded_forall,
    succ_chain,
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownSymbolError(ParseError):
    pass


class ArityError(ParseError):
    pass


@dataclass(frozen=True)
class Name:
    """Token for a defined symbol."""

    text: str

    def __str__(self) -> str:
        return self.text


Token = object  # str | Var | Name

CONNECTIVES = {"∧": And, "∨": Or, "→": Imp, "↔": Iff}
_CONNECTIVE_SYMBOL = {cls: sym for sym, cls in CONNECTIVES.items()}
_RELATIONS = ("=", "<", "≤", "≠")
_OPERATORS = frozenset(_RELATIONS) | {"+", "×"} | frozenset(CONNECTIVES)

_KEYWORDS = {"forall": "∀", "exists": "∃", "not": "¬", "and": "∧", "or": "∨"}
_SINGLE = set("0¬∧∨→↔∀∃(),=<+×≤≠")
_ASCII = [("<->", "↔"), ("->", "→"), ("<=", "≤"), ("!=", "≠"), ("*", "×")]


def _registry(registry):
    if registry is None:
        from .registry import standard_registry

        return standard_registry()
    return registry


# -- printing ----------------------------------------------------------------


def tokens(e: Expr, layout: bool = True) -> list[Token]:
    """Token stream of the canonical printing of ``e``.

    With ``layout`` false the spaces and argument commas are omitted; that is
    the symbol sequence the Gödel coder numbers.
    """
    out: list[Token] = []
    _emit(e, layout, out)
    return out


def _emit(e: Expr, layout: bool, out: list) -> None:
    push = out.append
    match e:
        case Zero():
            push("0")
        case Var():
            push(e)
        case Succ():
            while isinstance(e, Succ):
                push("S")
                e = e.arg
            _emit(e, layout, out)
        case Add(l, r) | Mul(l, r):
            push("(")
            _emit(l, layout, out)
            push("+" if isinstance(e, Add) else "×")
            _emit(r, layout, out)
            push(")")
        case DefFun(name, args) | DefPred(name, args):
            push(Name(name))
            push("(")
            for i, a in enumerate(args):
                if i and layout:
                    push(",")
                _emit(a, layout, out)
            push(")")
        case Eq(l, r) | Lt(l, r):
            push("(")
            _emit(l, layout, out)
            push("=" if isinstance(e, Eq) else "<")
            _emit(r, layout, out)
            push(")")
        case Not(b):
            push("¬")
            _emit(b, layout, out)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            push("(")
            _emit(l, layout, out)
            push(_CONNECTIVE_SYMBOL[type(e)])
            _emit(r, layout, out)
            push(")")
        case Forall(v, Imp(Lt(Var(w), bound), body)) if v == w:
            _bounded("∀", v, bound, body, layout, out)
        case Exists(v, And(Lt(Var(w), bound), body)) if v == w:
            _bounded("∃", v, bound, body, layout, out)
        case Forall(v, body) | Exists(v, body):
            push("∀" if isinstance(e, Forall) else "∃")
            push(Var(v))
            if layout:
                push(" ")
            _emit(body, layout, out)
        case _:
            raise TypeError(f"not an expression: {e!r}")


def _bounded(q, v, bound, body, layout, out):
    out += ["(", q, Var(v), "<"]
    _emit(bound, layout, out)
    out.append(")")
    _emit(body, layout, out)


def token_text(tok: Token) -> str:
    if isinstance(tok, Var):
        return f"v{tok.index}"
    return str(tok)


def render(e: Expr) -> str:
    """Canonical string form of a term or formula."""
    return "".join(token_text(t) for t in tokens(e))


# -- lexing ------------------------------------------------------------------


def lex(text: str, registry=None) -> list[tuple[Token, int]]:
    """Split ``text`` into ``(token, offset)`` pairs."""
    registry = _registry(registry)
    out: list[tuple[Token, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for alias, sym in _ASCII:
            if text.startswith(alias, i):
                out.append((sym, i))
                i += len(alias)
                break
        else:
            if c in _SINGLE:
                out.append((c, i))
                i += 1
            elif c.isalpha() or c == "_":
                i = _lex_word(text, i, registry, out)
            else:
                raise ParseError(f"unexpected character {c!r}", i)
    return out


def _lex_word(text, i, registry, out):
    j = i
    while j < len(text) and (text[j].isalnum() or text[j] == "_"):
        j += 1
    while i < j:
        word = text[i:j]
        if word in _KEYWORDS:
            out.append((_KEYWORDS[word], i))
            return j
        if registry.get(word) is not None:
            out.append((Name(word), i))
            return j
        if word[0] == "v" and len(word) > 1 and word[1].isdigit():
            k = i + 1
            while k < j and text[k].isdigit():
                k += 1
            out.append((Var(int(text[i + 1 : k])), i))
            i = k
            continue
        if word[0] == "S":
            out.append(("S", i))
            i += 1
            continue
        if word[0] == "0":
            out.append(("0", i))
            i += 1
            continue
        raise UnknownSymbolError(f"unknown symbol {word!r}", i)
    return j


# -- parsing -----------------------------------------------------------------


def _paren_ops(toks: Sequence[Token]) -> dict[int, Token]:
    """Map each '(' index to the first operator at its own nesting depth."""
    ops: dict[int, Token] = {}
    stack: list[int] = []
    for i, t in enumerate(toks):
        if t == "(":
            stack.append(i)
        elif t == ")":
            if stack:
                stack.pop()
        elif stack and isinstance(t, str) and t in _OPERATORS and stack[-1] not in ops:
            ops[stack[-1]] = t
    return ops


class _Parser:
    def __init__(self, toks, positions, registry, commas: bool):
        self.toks = list(toks)
        self.pos = list(positions)
        self.registry = registry
        self.commas = commas
        self.i = 0
        self.ops = _paren_ops(self.toks)

    # helpers
    def where(self) -> int:
        if self.i < len(self.pos):
            return self.pos[self.i]
        return self.pos[-1] + 1 if self.pos else 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.where())
        self.i += 1
        return tok

    def expect(self, sym: str):
        if self.peek() != sym:
            found = "end of input" if self.peek() is None else repr(token_text(self.peek()))
            raise ParseError(f"expected {sym!r}, found {found}", self.where())
        self.i += 1

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"trailing input {token_text(self.peek())!r}", self.where())

    def symbol(self, name: Name, kind: str):
        sym = self.registry.get(name.text)
        if sym is None:
            raise UnknownSymbolError(f"unknown symbol {name.text!r}", self.where())
        if sym.kind != kind:
            raise ParseError(f"{name.text} is a {sym.kind}, expected a {kind}", self.where())
        return sym

    def args(self, sym) -> tuple[Term, ...]:
        start = self.where()
        self.expect("(")
        out = []
        if self.commas:
            if self.peek() != ")":
                out.append(self.term())
                while self.peek() == ",":
                    self.i += 1
                    out.append(self.term())
        else:
            for _ in range(sym.arity):
                out.append(self.term())
        self.expect(")")
        if len(out) != sym.arity:
            raise ArityError(f"{sym.name} takes {sym.arity} argument(s), got {len(out)}", start)
        return tuple(out)

    # grammar
    def term(self) -> Term:
        tok = self.peek()
        if tok == "S":
            n = 0
            while self.peek() == "S":
                self.i += 1
                n += 1
            return succ_chain(n, self.term())
        if tok == "0":
            self.i += 1
            return ZERO
        if isinstance(tok, Var):
            self.i += 1
            return tok
        if isinstance(tok, Name):
            sym = self.symbol(tok, "function")
            self.i += 1
            return DefFun(sym.name, self.args(sym))
        if tok == "(":
            self.i += 1
            left = self.term()
            op = self.next()
            if op not in ("+", "×"):
                raise ParseError(f"expected '+' or '×', found {token_text(op)!r}", self.pos[self.i - 1])
            right = self.term()
            self.expect(")")
            return Add(left, right) if op == "+" else Mul(left, right)
        found = "end of input" if tok is None else repr(token_text(tok))
        raise ParseError(f"expected a term, found {found}", self.where())

    def formula(self) -> Formula:
        tok = self.peek()
        if tok == "¬":
            self.i += 1
            return Not(self.formula())
        if tok in ("∀", "∃"):
            self.i += 1
            v = self.next()
            if not isinstance(v, Var):
                raise ParseError("expected a variable after quantifier", self.pos[self.i - 1])
            body = self.formula()
            return Forall(v.index, body) if tok == "∀" else Exists(v.index, body)
        if isinstance(tok, Name):
            sym = self.symbol(tok, "predicate")
            self.i += 1
            return DefPred(sym.name, self.args(sym))
        if tok == "(":
            return self.parenthesised()
        found = "end of input" if tok is None else repr(token_text(tok))
        raise ParseError(f"expected a formula, found {found}", self.where())

    def parenthesised(self) -> Formula:
        start = self.i
        if self.peek(1) in ("∀", "∃") and isinstance(self.peek(2), Var) and self.peek(3) in ("<", "≤"):
            q, v, rel = self.peek(1), self.peek(2).index, self.peek(3)
            self.i += 4
            bound = self.term()
            if rel == "≤":
                bound = Succ(bound)
            self.expect(")")
            body = self.formula()
            return bounded_forall(v, bound, body) if q == "∀" else bounded_exists(v, bound, body)
        op = self.ops.get(start)
        self.i += 1
        if op in _RELATIONS:
            left = self.term()
            rel = self.next()
            if rel not in _RELATIONS:
                raise ParseError(f"expected a relation, found {token_text(rel)!r}", self.pos[self.i - 1])
            right = self.term()
            self.expect(")")
            if rel == "=":
                return Eq(left, right)
            if rel == "<":
                return Lt(left, right)
            if rel == "≤":
                return Lt(left, Succ(right))
            return Not(Eq(left, right))
        if op in CONNECTIVES:
            left = self.formula()
            sym = self.next()
            if sym not in CONNECTIVES:
                raise ParseError(f"expected a connective, found {token_text(sym)!r}", self.pos[self.i - 1])
            right = self.formula()
            self.expect(")")
            return CONNECTIVES[sym](left, right)
        raise ParseError("parenthesised expression is not a formula", self.pos[start])


def _parser(text: str, registry) -> _Parser:
    registry = _registry(registry)
    lexed = lex(text, registry)
    return _Parser([t for t, _ in lexed], [p for _, p in lexed], registry, commas=True)


def parse(text: str, registry=None) -> Formula:
    """Parse a formula."""
    p = _parser(text, registry)
    f = p.formula()
    p.done()
    return f


def parse_term(text: str, registry=None) -> Term:
    p = _parser(text, registry)
    t = p.term()
    p.done()
    return t


def parse_expr(text: str, registry=None) -> Expr:
    """Parse a formula, falling back to a term."""
    try:
        return parse(text, registry)
    except ParseError as formula_error:
        try:
            return parse_term(text, registry)
        except ParseError:
            raise formula_error from None


def parse_tokens(toks: Sequence[Token], registry=None) -> Expr:
    """Parse a layout-free token sequence (as recovered from a Gödel code)."""
    registry = _registry(registry)
    positions = list(range(len(toks)))
    p = _Parser(toks, positions, registry, commas=False)
    try:
        f = p.formula()
        p.done()
        return f
    except ParseError as formula_error:
        p = _Parser(toks, positions, registry, commas=False)
        try:
            t = p.term()
            p.done()
            return t
        except ParseError:
            raise formula_error from None
