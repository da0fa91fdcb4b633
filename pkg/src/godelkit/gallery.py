"""The four paradox sentence families and the least number principle.

Each family is the fixed point of a template ``φ(x, y)`` in which ``y`` stands
for the code of the sentence being defined.  Variables: ``x = v0``,
``y = v1``; the template's own bound variables are ``v2`` and ``v3``.
In the templates ``⌜x⌝`` is the numeral of the code of ``v0`` and ``⌜z⌝``
under a quantifier is ``Num(z)``, the code of the numeral of ``z``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .classify import classify
from .coding import godel_encode, symbol_sequence, var_code
from .diagonal import DiagonalResult, diagonalize, verify_fixed_point
from .grammar import parse, render
from .syntax import (
    And,
    Exists,
    Formula,
    Imp,
    Not,
    Var,
    bounded_forall,
    free_vars,
    fresh_var,
    numeral,
    substitute,
)

X, Y = 0, 1
FAMILIES = ("P", "Q", "R", "F")
DEFAULT_INSTANCES = (0, 1)


def _quoted_x() -> str:
    return render(numeral(var_code(X)))


def _refuted(v: str) -> str:
    # Prov(⌜¬ψ(v)⌝) with y standing for ⌜ψ⌝
    return f"Prov(Neg(Subs(v1,{_quoted_x()},Num({v}))))"


def template(family: str) -> Formula:
    """The open formula ``φ(x, y)`` that ``family`` is the fixed point of."""
    texts = {
        # ∃z Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))) ∧ (0 ≤ x)
        "P": f"(∃v2 {_refuted('v2')}∧(0≤v0))",
        # ∃z (z ≠ x ∧ Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))))
        "Q": f"∃v2 ((v2≠v0)∧{_refuted('v2')})",
        # ∃z (HetSeq(z) ∧ l(z)=Sx ∧ (∀t≤z)(Ele(t,z) → Prov(Neg(Subs(y,⌜x⌝,⌜t⌝)))))
        "R": f"∃v2 ((HetSeq(v2)∧(l(v2)=Sv0))∧(∀v3≤v2)(Ele(v3,v2)→{_refuted('v3')}))",
        # (∀z<x) Prov(Neg(Subs(y,⌜x⌝,⌜z⌝))) → Prov(Neg(y))
        "F": f"((∀v2<v0){_refuted('v2')}→Prov(Neg(v1)))",
    }
    if family not in texts:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return parse(texts[family])


@dataclass(frozen=True)
class GalleryEntry:
    family: str
    diagonal: DiagonalResult
    fixed_point_ok: bool
    classification: str
    instances: tuple[tuple[int, Formula], ...]

    @property
    def psi(self) -> Formula:
        return self.diagonal.psi

    @property
    def self_code(self) -> int:
        return self.diagonal.self_code

    @property
    def template(self) -> Formula:
        return self.diagonal.phi


def instance(psi: Formula, k: int) -> Formula:
    """``ψ(k)``: the numeral of ``k`` put for ``x``."""
    return substitute(psi, X, numeral(k))


def build(family: str, instances=DEFAULT_INSTANCES) -> GalleryEntry:
    d = diagonalize(template(family), X, Y)
    return GalleryEntry(
        family=family,
        diagonal=d,
        fixed_point_ok=verify_fixed_point(d),
        classification=classify(d.psi),
        instances=tuple((k, instance(d.psi, k)) for k in instances),
    )


def build_p(instances=DEFAULT_INSTANCES) -> GalleryEntry:
    """Someone's sentence is refutable."""
    return build("P", instances)


def build_q(instances=DEFAULT_INSTANCES) -> GalleryEntry:
    """Someone else's sentence is refutable."""
    return build("Q", instances)


def build_r(instances=DEFAULT_INSTANCES) -> GalleryEntry:
    """At least k+1 sentences are refutable."""
    return build("R", instances)


def build_f(instances=DEFAULT_INSTANCES) -> GalleryEntry:
    """The earliest unexpected inspection day."""
    return build("F", instances)


def recheck(e: GalleryEntry, psi: Formula) -> GalleryEntry:
    """``e`` with ψ replaced, its code re-encoded and the verdict recomputed."""
    d = replace(e.diagonal, psi=psi, self_code=godel_encode(psi))
    return replace(e, diagonal=d, fixed_point_ok=verify_fixed_point(d), classification=classify(psi))


def lnp_instance(p: Formula, x: int) -> Formula:
    """``∃x P(x) → ∃x (P(x) ∧ (∀y<x) ¬P(y))`` with ``y`` fresh."""
    if x not in free_vars(p):
        raise ValueError(f"v{x} is not free in {render(p)}")
    y = fresh_var(p, Var(x))
    below = bounded_forall(y, Var(x), Not(substitute(p, x, Var(y))))
    return Imp(Exists(x, p), Exists(x, And(p, below)))


# -- reports -----------------------------------------------------------------


def report(e: GalleryEntry) -> dict:
    return {
        "family": e.family,
        "psi": render(e.psi),
        "code": str(e.self_code),
        "symbols": len(symbol_sequence(e.psi)),
        "fixedPointOk": e.fixed_point_ok,
        "classification": e.classification,
        "instances": [{"k": k, "sentence": render(s)} for k, s in e.instances],
    }


def format_report(rec: dict) -> str:
    """Key-value text: one ``key=value`` per line, instances as ``instance[k]``."""
    lines = [
        f"family={rec['family']}",
        f"fixedPointOk={'true' if rec['fixedPointOk'] else 'false'}",
        f"classification={rec['classification']}",
        f"symbols={rec['symbols']}",
        f"code={rec['code']}",
        f"psi={rec['psi']}",
    ]
    lines += [f"instance[{i['k']}]={i['sentence']}" for i in rec["instances"]]
    return "\n".join(lines) + "\n"


def format_report_json(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False, indent=2) + "\n"
