"""Fixed points by diagonalisation.

Given ``φ(x, y)`` pick a fresh variable ``z`` and let

    θ(x, z) = φ(x, Subs(z, ⌜z⌝, Num(z)))
    ψ(x)    = θ(x, ⌜θ⌝)

The pseudo-term ``Subs(⌜θ⌝, ⌜z⌝, Num(⌜θ⌝))`` sitting inside ψ denotes the
code of θ with the numeral of ⌜θ⌝ put for ``z``, which is ψ itself.  That
identity is checked numerically by :func:`verify_fixed_point`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coding import godel_encode, var_code
from .registry import eval_defined
from .syntax import DefFun, Formula, Term, Var, fresh_var, numeral, replace_term, substitute


@dataclass(frozen=True)
class DiagonalResult:
    phi: Formula
    x: int
    y: int
    z: int
    theta: Formula
    psi: Formula
    self_code: int
    residual: int


def diagonal_term(arg: Term, z: int) -> Term:
    """``Subs(arg, ⌜v_z⌝, Num(arg))``."""
    return DefFun("Subs", (arg, numeral(var_code(z)), DefFun("Num", (arg,))))


def self_reference_value(theta: Formula, z: int) -> int:
    """Evaluate ``Subs(⌜θ⌝, ⌜v_z⌝, Num(⌜θ⌝))`` through the registry oracles."""
    c = godel_encode(theta)
    return eval_defined("Subs", [c, var_code(z), eval_defined("Num", [c])])


def diagonalize(phi: Formula, x: int, y: int) -> DiagonalResult:
    if x == y:
        raise ValueError("the two distinguished variables must differ")
    z = fresh_var(phi, Var(x), Var(y))
    theta = substitute(phi, y, diagonal_term(Var(z), z))
    c = godel_encode(theta)
    psi = substitute(theta, z, numeral(c))
    return DiagonalResult(
        phi=phi,
        x=x,
        y=y,
        z=z,
        theta=theta,
        psi=psi,
        self_code=godel_encode(psi),
        residual=self_reference_value(theta, z),
    )


def verify_fixed_point(r: DiagonalResult) -> bool:
    """ψ's code, the stored code, and the self-reference value all coincide."""
    code = godel_encode(r.psi)
    return code == r.self_code == r.residual == self_reference_value(r.theta, r.z)


def strip_diagonal(r: DiagonalResult) -> Formula:
    """Put ``y`` back where the self-referential pseudo-term stands in ψ."""
    embedded = diagonal_term(numeral(godel_encode(r.theta)), r.z)
    return replace_term(r.psi, embedded, Var(r.y))
