"""Evaluation in the standard model of arithmetic.

Bounded quantifiers are decided by running through the bound.  An unbounded
``∃`` tries the witnesses ``0 … budget-1`` and answers TRUE on success,
UNKNOWN otherwise; dually an unbounded ``∀`` answers FALSE on a counterexample
and UNKNOWN otherwise.  ``Prov`` atoms run a proof search with the same
budget.  Connectives follow strong Kleene logic, so a larger budget can only
turn UNKNOWN into a definite value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .registry import standard_registry
from .syntax import (
    Add,
    And,
    DefFun,
    DefPred,
    Eq,
    Exists,
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
    bounded_parts,
    free_vars,
    term_vars,
)
from .truth import FALSE, TRUE, UNKNOWN, TruthValue3

DEFAULT_BUDGET = 10000


class UnassignedVariableError(KeyError):
    def __str__(self) -> str:
        return f"no value assigned to v{self.args[0]}"


@dataclass(frozen=True)
class Evaluation:
    value: TruthValue3
    witness: int | None = None
    steps: int = 0


class Evaluator:
    def __init__(self, budget: int = DEFAULT_BUDGET, registry=None):
        self.budget = budget
        self.registry = registry or standard_registry()
        self.steps = 0

    def term(self, t: Term, a: Mapping[int, int]) -> int:
        match t:
            case Zero():
                return 0
            case Var(i):
                if i not in a:
                    raise UnassignedVariableError(i)
                return a[i]
            case Succ():
                n = 0
                while isinstance(t, Succ):
                    t, n = t.arg, n + 1
                return self.term(t, a) + n
            case Add(l, r):
                return self.term(l, a) + self.term(r, a)
            case Mul(l, r):
                return self.term(l, a) * self.term(r, a)
            case DefFun(name, args):
                return self.registry[name].oracle(*(self.term(x, a) for x in args))
        raise TypeError(f"not a term: {t!r}")

    def formula(self, f: Formula, a: Mapping[int, int]) -> TruthValue3:
        match f:
            case Eq(l, r):
                return TruthValue3.of(self.term(l, a) == self.term(r, a))
            case Lt(l, r):
                return TruthValue3.of(self.term(l, a) < self.term(r, a))
            case Not(b):
                return ~self.formula(b, a)
            case And(l, r):
                left = self.formula(l, a)
                return left if left is FALSE else left & self.formula(r, a)
            case Or(l, r):
                left = self.formula(l, a)
                return left if left is TRUE else left | self.formula(r, a)
            case Imp(l, r):
                left = self.formula(l, a)
                return TRUE if left is FALSE else left.implies(self.formula(r, a))
            case Iff(l, r):
                return self.formula(l, a).iff(self.formula(r, a))
            case Forall() | Exists():
                return self.quantifier(f, a)[0]
            case DefPred(name, args):
                return self.atom(name, [self.term(x, a) for x in args])
        raise TypeError(f"not a formula: {f!r}")

    def atom(self, name: str, values: list[int]) -> TruthValue3:
        sym = self.registry[name]
        if not sym.budgeted:
            return TruthValue3.of(bool(sym.oracle(*values)))
        from .coding import CodingError, decode_formula
        from .grammar import ParseError
        from .kernel import search_with_cost

        try:
            goal = decode_formula(values[0])
        except (CodingError, ParseError):
            return UNKNOWN
        proof, cost = search_with_cost(goal, self.budget)
        self.steps += cost
        return TRUE if proof is not None else UNKNOWN

    def quantifier(self, f: Formula, a: Mapping[int, int]) -> tuple[TruthValue3, int | None]:
        """Value of a quantified formula and, for ``∃``, the witness found."""
        exists = isinstance(f, Exists)
        decisive = TRUE if exists else FALSE
        parts = bounded_parts(f)
        if parts is not None:
            v, bound, body = parts
            candidates = range(self.term(bound, a))
        else:
            v, body = f.var, f.body
            candidates = range(self.budget)
        result = FALSE if exists else TRUE
        for n in candidates:
            if parts is None:
                self.steps += 1
            r = self.formula(body, {**a, v: n})
            if r is decisive:
                return decisive, n if exists else None
            if r is UNKNOWN:
                result = UNKNOWN
        if parts is None:
            return UNKNOWN, None
        return result, None


def evaluate(f: Formula, assignment: Mapping[int, int] | None = None, budget: int = DEFAULT_BUDGET, registry=None) -> Evaluation:
    """Evaluate ``f`` and report the value, a top-level witness, and the work done."""
    a = dict(assignment or {})
    missing = sorted(free_vars(f) - a.keys())
    if missing:
        raise UnassignedVariableError(missing[0])
    ev = Evaluator(budget, registry)
    if isinstance(f, Exists):
        value, witness = ev.quantifier(f, a)
    else:
        value, witness = ev.formula(f, a), None
    return Evaluation(value, witness, ev.steps)


def eval_formula(f: Formula, assignment: Mapping[int, int] | None = None, budget: int = DEFAULT_BUDGET, registry=None) -> TruthValue3:
    return evaluate(f, assignment, budget, registry).value


def eval_term(t: Term, assignment: Mapping[int, int] | None = None, registry=None) -> int:
    a = dict(assignment or {})
    missing = sorted(term_vars(t) - a.keys())
    if missing:
        raise UnassignedVariableError(missing[0])
    return Evaluator(0, registry).term(t, a)
