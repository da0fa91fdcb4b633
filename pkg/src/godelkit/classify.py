"""Syntactic Δ0 / Σ1 classification.

Both tests are sufficient conditions read off the syntax tree; provable
equivalence, which the logical notions are defined up to, is undecidable.
"""

from __future__ import annotations

from .registry import DELTA0, SIGMA1, standard_registry
from .syntax import (
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
    Not,
    Or,
    bounded_parts,
    subterms,
)


def _terms_delta0(terms, registry) -> bool:
    return all(
        registry[t.name].classification == DELTA0
        for a in terms
        for t in subterms(a)
        if isinstance(t, DefFun)
    )


def classify_delta0(f: Formula, registry=None) -> bool:
    """Every quantifier is bounded and every defined symbol is Δ0."""
    registry = registry or standard_registry()
    match f:
        case Eq(l, r) | Lt(l, r):
            return _terms_delta0((l, r), registry)
        case Not(b):
            return classify_delta0(b, registry)
        case And(l, r) | Or(l, r) | Imp(l, r) | Iff(l, r):
            return classify_delta0(l, registry) and classify_delta0(r, registry)
        case Forall() | Exists():
            parts = bounded_parts(f)
            if parts is None:
                return False
            _, bound, body = parts
            return _terms_delta0((bound,), registry) and classify_delta0(body, registry)
        case DefPred(name, args):
            return registry[name].classification == DELTA0 and _terms_delta0(args, registry)
    raise TypeError(f"not a formula: {f!r}")


def classify_sigma1(f: Formula, registry=None) -> bool:
    """A block of existential quantifiers over a Δ0 matrix or a Σ1 atom."""
    registry = registry or standard_registry()
    while isinstance(f, Exists) and bounded_parts(f) is None:
        f = f.body
    if isinstance(f, DefPred) and registry[f.name].classification == SIGMA1:
        return _terms_delta0(f.args, registry)
    return classify_delta0(f, registry)


def classify(f: Formula, registry=None) -> str:
    """``"Delta0"``, ``"Sigma1"`` or ``"other"``."""
    if classify_delta0(f, registry):
        return DELTA0
    if classify_sigma1(f, registry):
        return SIGMA1
    return "other"


def strip_exists(f: Formula) -> tuple[list[int], Formula]:
    """Leading unbounded existential variables and the matrix under them."""
    vs = []
    while isinstance(f, Exists) and bounded_parts(f) is None:
        vs.append(f.var)
        f = f.body
    return vs, f


__all__ = ["classify", "classify_delta0", "classify_sigma1", "strip_exists"]
