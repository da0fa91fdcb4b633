"""Hilbert-style proofs for Peano arithmetic.

A proof is a sequence of lines, each an axiom instance, a modus ponens step
or a generalisation.  Axiom instances name a schema and give its parameters
explicitly, so checking never has to guess a unifier.

Proof text format, one line per step (line numbers from 1)::

    1. (v0=v0) ; ax Refl t=v0
    2. ∀v0 (v0=v0) ; gen 1 v0
    3. (∀v0 (v0=v0)→(0=0)) ; ax Inst v=v0 | phi=(v0=v0) | t=0
    4. (0=0) ; mp 2 3

``mp i j`` cites the minor premise ``i`` and the implication ``j``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .coding import CodingError, godel_decode, godel_encode, is_code, seq_decode, seq_encode
from .grammar import ParseError, parse, parse_expr, render
from .syntax import (
    Add,
    And,
    CaptureError,
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
    Var,
    ZERO,
    free_vars,
    fresh_var,
    is_formula,
    is_term,
    subformulas,
    substitute,
    subterms,
    term_vars,
)

DEFAULT_BUDGET = 10000


class ProofFormatError(ValueError):
    pass


# -- proof objects -----------------------------------------------------------


@dataclass(frozen=True)
class Axiom:
    schema: str
    bindings: tuple[tuple[str, Expr], ...]

    @classmethod
    def of(cls, schema: str, **bindings) -> "Axiom":
        return cls(schema, tuple(sorted(bindings.items())))


@dataclass(frozen=True)
class ModusPonens:
    minor: int  # φ
    major: int  # φ → ψ


@dataclass(frozen=True)
class Generalization:
    premise: int
    var: int


Justification = Axiom | ModusPonens | Generalization


@dataclass(frozen=True)
class Line:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[Line, ...]

    @property
    def conclusion(self) -> Formula | None:
        return self.lines[-1].formula if self.lines else None

    def __len__(self) -> int:
        return len(self.lines)


# -- axiom schemas -----------------------------------------------------------

FORMULA, TERM, VARIABLE = "formula", "term", "var"


@dataclass(frozen=True)
class Schema:
    name: str
    params: tuple[tuple[str, str], ...]
    build: Callable[..., Formula]


class SchemaError(ValueError):
    pass


def _x(b):
    return b.get("x", Var(0))


def _y(b):
    return b.get("y", Var(1))


def _not_free(v: Var, phi: Formula):
    if v.index in free_vars(phi):
        raise SchemaError(f"v{v.index} is free in {render(phi)}")


def _order(x, y):
    z = fresh_var(Eq(x, y))
    return Iff(Lt(x, y), Exists(z, Eq(Add(x, Succ(Var(z))), y)))


_F, _T, _V = FORMULA, TERM, VARIABLE

SCHEMAS: tuple[Schema, ...] = (
    Schema("Refl", (("t", _T),), lambda t: Eq(t, t)),
    Schema("K", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(phi, Imp(psi, phi))),
    Schema(
        "S",
        (("phi", _F), ("psi", _F), ("chi", _F)),
        lambda phi, psi, chi: Imp(
            Imp(phi, Imp(psi, chi)), Imp(Imp(phi, psi), Imp(phi, chi))
        ),
    ),
    Schema(
        "N", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(Imp(Not(phi), Not(psi)), Imp(psi, phi))
    ),
    Schema("AndL", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(And(phi, psi), phi)),
    Schema("AndR", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(And(phi, psi), psi)),
    Schema(
        "AndI", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(phi, Imp(psi, And(phi, psi)))
    ),
    Schema("OrL", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(phi, Or(phi, psi))),
    Schema("OrR", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(psi, Or(phi, psi))),
    Schema(
        "OrE",
        (("phi", _F), ("psi", _F), ("chi", _F)),
        lambda phi, psi, chi: Imp(Imp(phi, chi), Imp(Imp(psi, chi), Imp(Or(phi, psi), chi))),
    ),
    Schema("IffL", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(Iff(phi, psi), Imp(phi, psi))),
    Schema("IffR", (("phi", _F), ("psi", _F)), lambda phi, psi: Imp(Iff(phi, psi), Imp(psi, phi))),
    Schema(
        "IffI",
        (("phi", _F), ("psi", _F)),
        lambda phi, psi: Imp(Imp(phi, psi), Imp(Imp(psi, phi), Iff(phi, psi))),
    ),
    Schema(
        "ExD",
        (("v", _V), ("phi", _F)),
        lambda v, phi: Imp(Exists(v.index, phi), Not(Forall(v.index, Not(phi)))),
    ),
    Schema(
        "ExI",
        (("v", _V), ("phi", _F)),
        lambda v, phi: Imp(Not(Forall(v.index, Not(phi))), Exists(v.index, phi)),
    ),
    Schema(
        "Inst",
        (("v", _V), ("phi", _F), ("t", _T)),
        lambda v, phi, t: Imp(Forall(v.index, phi), substitute(phi, v.index, t)),
    ),
    Schema(
        "Dist",
        (("v", _V), ("phi", _F), ("psi", _F)),
        lambda v, phi, psi: _not_free(v, phi)
        or Imp(Forall(v.index, Imp(phi, psi)), Imp(phi, Forall(v.index, psi))),
    ),
    Schema(
        "Leib",
        (("s", _T), ("t", _T), ("v", _V), ("phi", _F)),
        lambda s, t, v, phi: Imp(
            Eq(s, t), Imp(substitute(phi, v.index, s), substitute(phi, v.index, t))
        ),
    ),
    Schema("PA1", (("x", _T),), lambda x: Not(Eq(Succ(x), ZERO))),
    Schema("PA2", (("x", _T), ("y", _T)), lambda x, y: Imp(Eq(Succ(x), Succ(y)), Eq(x, y))),
    Schema("PA3", (("x", _T),), lambda x: Eq(Add(x, ZERO), x)),
    Schema("PA4", (("x", _T), ("y", _T)), lambda x, y: Eq(Add(x, Succ(y)), Succ(Add(x, y)))),
    Schema("PA5", (("x", _T),), lambda x: Eq(Mul(x, ZERO), ZERO)),
    Schema("PA6", (("x", _T), ("y", _T)), lambda x, y: Eq(Mul(x, Succ(y)), Add(Mul(x, y), x))),
    Schema("Ord", (("x", _T), ("y", _T)), _order),
    Schema(
        "Ind",
        (("v", _V), ("phi", _F)),
        lambda v, phi: Imp(
            substitute(phi, v.index, ZERO),
            Imp(
                Forall(v.index, Imp(phi, substitute(phi, v.index, Succ(v)))),
                Forall(v.index, phi),
            ),
        ),
    ),
)
SCHEMA_BY_NAME = {s.name: s for s in SCHEMAS}
SCHEMA_INDEX = {s.name: i for i, s in enumerate(SCHEMAS)}


def instantiate(schema: str, bindings) -> Formula:
    """The formula an axiom instance asserts.

    Raises ``SchemaError`` for malformed bindings or a failed side condition
    and ``CaptureError`` when a substitution inside the schema would capture.
    """
    s = SCHEMA_BY_NAME.get(schema)
    if s is None:
        raise SchemaError(f"unknown schema {schema!r}")
    b = dict(bindings)
    if set(b) != {k for k, _ in s.params}:
        raise SchemaError(f"{schema} expects bindings {[k for k, _ in s.params]}, got {sorted(b)}")
    for key, sort in s.params:
        val = b[key]
        ok = (
            is_formula(val)
            if sort == FORMULA
            else isinstance(val, Var)
            if sort == VARIABLE
            else is_term(val)
        )
        if not ok:
            raise SchemaError(f"binding {key} of {schema} must be a {sort}")
    return s.build(**b)


# -- checking ----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str = ""
    line: int | None = None  # 1-based

    def __bool__(self) -> bool:
        return self.accepted


def _line_error(lines, k, j):
    if isinstance(j, Axiom):
        try:
            expected = instantiate(j.schema, j.bindings)
        except (SchemaError, CaptureError) as exc:
            return str(exc)
        if expected != lines[k].formula:
            return f"not the {j.schema} instance for these bindings"
        return None
    if isinstance(j, ModusPonens):
        for ref in (j.minor, j.major):
            if not 0 <= ref < k:
                return f"cites line {ref + 1}, which is not an earlier line"
        if lines[j.major].formula != Imp(lines[j.minor].formula, lines[k].formula):
            return f"line {j.major + 1} is not line {j.minor + 1} → this line"
        return None
    if isinstance(j, Generalization):
        if not 0 <= j.premise < k:
            return f"cites line {j.premise + 1}, which is not an earlier line"
        if lines[k].formula != Forall(j.var, lines[j.premise].formula):
            return f"not the generalisation of line {j.premise + 1} over v{j.var}"
        return None
    return "unknown justification"


def check_proof(p: Proof) -> Verdict:
    if not p.lines:
        return Verdict(False, "empty proof has no conclusion")
    for k in range(len(p.lines)):
        err = _line_error(p.lines, k, p.lines[k].justification)
        if err:
            return Verdict(False, err, k + 1)
    return Verdict(True)


# -- arithmetisation of proofs ---------------------------------------------

_AX, _MP, _GEN = 0, 1, 2


def encode_proof(p: Proof) -> int:
    """Flat sequence code: per line ``⌜φ⌝, tag, …payload``.

    Payloads: axiom ``schema-index, ⌜binding⌝…`` (schema parameter order),
    modus ponens ``minor, major``, generalisation ``premise, var`` (0-based).
    """
    out: list[int] = []
    for line in p.lines:
        out.append(godel_encode(line.formula))
        j = line.justification
        if isinstance(j, Axiom):
            s = SCHEMA_BY_NAME[j.schema]
            b = dict(j.bindings)
            out += [_AX, SCHEMA_INDEX[j.schema]]
            out += [godel_encode(b[k]) for k, _ in s.params]
        elif isinstance(j, ModusPonens):
            out += [_MP, j.minor, j.major]
        else:
            out += [_GEN, j.premise, j.var]
    return seq_encode(out)


def decode_proof(c: int) -> Proof:
    try:
        items = seq_decode(c)
    except CodingError as exc:
        raise ProofFormatError(str(exc)) from None
    lines = []
    i = 0

    def take():
        nonlocal i
        if i >= len(items):
            raise ProofFormatError("truncated proof code")
        i += 1
        return items[i - 1]

    def expr(code):
        try:
            return godel_decode(code)
        except (CodingError, ParseError) as exc:
            raise ProofFormatError(f"bad expression code: {exc}") from None

    while i < len(items):
        formula = expr(take())
        if not is_formula(formula):
            raise ProofFormatError("proof line is not a formula")
        tag = take()
        if tag == _AX:
            k = take()
            if k >= len(SCHEMAS):
                raise ProofFormatError(f"no schema number {k}")
            s = SCHEMAS[k]
            just = Axiom(s.name, tuple(sorted((key, expr(take())) for key, _ in s.params)))
        elif tag == _MP:
            just = ModusPonens(take(), take())
        elif tag == _GEN:
            just = Generalization(take(), take())
        else:
            raise ProofFormatError(f"unknown line tag {tag}")
        lines.append(Line(formula, just))
    return Proof(tuple(lines))


@lru_cache(maxsize=4096)
def proves(p: int, x: int) -> bool:
    """Meta-level ``Prf``: ``p`` codes an accepted proof whose conclusion has code ``x``."""
    if not is_code(p) or not is_code(x):
        return False
    try:
        proof = decode_proof(p)
    except ProofFormatError:
        return False
    return bool(check_proof(proof)) and godel_encode(proof.conclusion) == x


# -- text format -------------------------------------------------------------


def format_justification(j: Justification) -> str:
    if isinstance(j, Axiom):
        s = SCHEMA_BY_NAME.get(j.schema)
        order = [k for k, _ in s.params] if s else [k for k, _ in j.bindings]
        b = dict(j.bindings)
        args = " | ".join(f"{k}={render(b[k])}" for k in order if k in b)
        return f"ax {j.schema} {args}".rstrip()
    if isinstance(j, ModusPonens):
        return f"mp {j.minor + 1} {j.major + 1}"
    return f"gen {j.premise + 1} v{j.var}"


def format_proof(p: Proof) -> str:
    return "".join(
        f"{k}. {render(line.formula)} ; {format_justification(line.justification)}\n"
        for k, line in enumerate(p.lines, 1)
    )


def _parse_justification(text: str, where: int) -> Justification:
    parts = text.split(None, 2)
    if not parts:
        raise ProofFormatError(f"line {where}: missing justification")
    kind = parts[0]
    try:
        if kind == "mp" and len(parts) == 3:
            i, j = parts[1], parts[2]
            return ModusPonens(int(i) - 1, int(j) - 1)
        if kind == "gen" and len(parts) == 3 and parts[2].startswith("v"):
            return Generalization(int(parts[1]) - 1, int(parts[2][1:]))
        if kind == "ax" and len(parts) >= 2:
            bindings = {}
            if len(parts) == 3:
                for item in parts[2].split("|"):
                    key, sep, value = item.strip().partition("=")
                    if not sep:
                        raise ProofFormatError(f"line {where}: binding {item.strip()!r} lacks '='")
                    bindings[key.strip()] = parse_expr(value.strip())
            return Axiom(parts[1], tuple(sorted(bindings.items())))
    except (ValueError, ParseError) as exc:
        if isinstance(exc, ProofFormatError):
            raise
        raise ProofFormatError(f"line {where}: {exc}") from None
    raise ProofFormatError(f"line {where}: cannot read justification {text!r}")


def parse_proof(text: str) -> Proof:
    lines = []
    for raw in text.splitlines():
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        number, dot, rest = raw.partition(".")
        if not dot or not number.strip().isdigit():
            raise ProofFormatError(f"expected '<n>. <formula> ; <justification>', got {raw!r}")
        where = int(number)
        if where != len(lines) + 1:
            raise ProofFormatError(f"line numbered {where} where {len(lines) + 1} was expected")
        formula_text, sep, just_text = rest.partition(" ; ")
        if not sep:
            raise ProofFormatError(f"line {where}: missing ' ; ' separator")
        try:
            formula = parse(formula_text.strip())
        except ParseError as exc:
            raise ProofFormatError(f"line {where}: {exc}") from None
        lines.append(Line(formula, _parse_justification(just_text.strip(), where)))
    return Proof(tuple(lines))


# -- search ------------------------------------------------------------------


class _Found(Exception):
    pass


class _Exhausted(Exception):
    pass


def _pools(goal: Formula):
    formulas = list(dict.fromkeys(subformulas(goal)))[:6]
    terms = list(dict.fromkeys(itertools.chain([ZERO], subterms(goal))))[:6]
    vs = sorted({0} | set(itertools.chain.from_iterable(term_vars(t) for t in terms)) | set(free_vars(goal)))
    for g in subformulas(goal):
        if isinstance(g, (Forall, Exists)):
            vs.append(g.var)
    vars_ = [Var(i) for i in dict.fromkeys(vs)][:3]
    return {FORMULA: formulas, TERM: terms, VARIABLE: vars_}


class _Search:
    """Forward closure of pooled axiom instances under MP and generalisation."""

    def __init__(self, goal: Formula, budget: int):
        self.goal = goal
        self.budget = budget
        self.how: dict[Formula, Justification] = {}
        self.order: list[Formula] = []
        self.by_antecedent: dict[Formula, list[Formula]] = {}
        self.queue: deque = deque()

    def add(self, f: Formula, how) -> None:
        self.queue.append((f, how))
        while self.queue:
            g, why = self.queue.popleft()
            if g in self.how:
                continue
            if len(self.order) >= self.budget:
                raise _Exhausted
            self.how[g] = why
            self.order.append(g)
            if g == self.goal:
                raise _Found
            if isinstance(g, Imp):
                self.by_antecedent.setdefault(g.left, []).append(g)
                if g.left in self.how:
                    self.queue.append((g.right, ("mp", g.left, g)))
            for imp in self.by_antecedent.get(g, ()):
                self.queue.append((imp.right, ("mp", g, imp)))

    def instances(self):
        pools = _pools(self.goal)
        for s in SCHEMAS:
            choices = [pools[sort] for _, sort in s.params]
            for combo in itertools.product(*choices):
                bindings = {k: v for (k, _), v in zip(s.params, combo)}
                try:
                    yield instantiate(s.name, bindings), Axiom.of(s.name, **bindings)
                except (SchemaError, CaptureError):
                    continue

    def run(self) -> int:
        for f, ax in self.instances():
            self.add(f, ax)
        pool_vars = [v.index for v in _pools(self.goal)[VARIABLE]]
        while True:
            before = len(self.order)
            for f in list(self.order):
                for v in pool_vars:
                    if v in free_vars(f):
                        self.add(Forall(v, f), ("gen", f, v))
            if len(self.order) == before:
                return before

    def proof(self) -> Proof:
        needed: set[Formula] = set()
        stack = [self.goal]
        while stack:
            f = stack.pop()
            if f in needed:
                continue
            needed.add(f)
            why = self.how[f]
            if isinstance(why, tuple):
                stack.extend(x for x in why[1:] if is_formula(x))
        ordered = [f for f in self.order if f in needed]
        index = {f: i for i, f in enumerate(ordered)}
        lines = []
        for f in ordered:
            why = self.how[f]
            if isinstance(why, Axiom):
                just = why
            elif why[0] == "mp":
                just = ModusPonens(index[why[1]], index[why[2]])
            else:
                just = Generalization(index[why[1]], why[2])
            lines.append(Line(f, just))
        return Proof(tuple(lines))


def _search(goal: Formula, budget: int) -> tuple[Proof | None, int]:
    s = _Search(goal, budget)
    try:
        s.run()
    except _Found:
        return s.proof(), len(s.order)
    except _Exhausted:
        pass
    return None, len(s.order)


@lru_cache(maxsize=2048)
def search_with_cost(goal: Formula, budget: int) -> tuple[Proof | None, int]:
    """Search result together with the number of lines generated."""
    return _search(goal, budget)


def search_cached(goal: Formula, budget: int) -> Proof | None:
    return search_with_cost(goal, budget)[0]


def search_proof(goal: Formula, budget: int = DEFAULT_BUDGET) -> Proof | None:
    """Look for a proof of ``goal`` among at most ``budget`` generated lines.

    ``None`` means the budget ran out or the closure saturated; it says
    nothing about provability.
    """
    return search_cached(goal, budget)
