"""Independent oracles and random generators shared by the test modules.

Nothing here calls into the coder or the evaluator; the point is to have a
second, deliberately naive route to every number and truth value the
library produces.
"""

from __future__ import annotations

import random

from godelkit.syntax import (
    Add,
    And,
    DefFun,
    DefPred,
    Eq,
    Exists,
    Forall,
    Iff,
    Imp,
    Lt,
    Mul,
    Not,
    Or,
    Succ,
    Var,
    Zero,
)

# -- digit oracles -------------------------------------------------------------

# written out by hand, independently of coding.SYMBOL_CODES
HAND_CODES = {"0": 1, "S": 2, "+": 3, "×": 4, "=": 5, "¬": 6, "∧": 7, "∨": 8, "→": 9,
              "↔": 10, "∀": 11, "∃": 12, "(": 13, ")": 14, "<": 15}
HAND_NAMES = ["Code", "l", "Dec", "Neg", "Subs", "Num", "HetSeq", "Ele", "Prf", "Prov"]


def octal_digits(x: int) -> list[int]:
    if x == 0:
        return [0]
    out = []
    while x:
        x, d = divmod(x, 8)
        out.append(d)
    return out[::-1]


def oracle_seq_encode(seq) -> int:
    """Arithmetic digit-by-digit construction: v = 10·v + (d+1), then 9."""
    v = 0
    for x in seq:
        for d in octal_digits(x):
            v = 10 * v + d + 1
        v = 10 * v + 9
    return v


def oracle_seq_decode(c: int) -> list[int] | None:
    """Read decimal digits right to left; ``None`` if ``c`` is not a code."""
    if c == 0:
        return []
    digits = []
    while c:
        c, d = divmod(c, 10)
        digits.append(d)
    digits.reverse()
    if digits[-1] != 9 or 0 in digits:
        return None
    out, cur = [], []
    for d in digits:
        if d == 9:
            if not cur or (len(cur) > 1 and cur[0] == 1):
                return None
            v = 0
            for e in cur:
                v = 8 * v + (e - 1)
            out.append(v)
            cur = []
        else:
            cur.append(d)
    return out


def hand_symbols(text: str) -> list[int]:
    """Symbol codes of a canonical string, scanned character by character."""
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        name = next((n for n in sorted(HAND_NAMES, key=len, reverse=True) if text.startswith(n, i)), None)
        if name:
            out.append(1000 + HAND_NAMES.index(name))
            i += len(name)
        elif ch in " ,":
            i += 1
        elif ch == "v" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(16 + int(text[i + 1 : j]))
            i = j
        else:
            out.append(HAND_CODES[ch])
            i += 1
    return out


def hand_godel(text: str) -> int:
    return oracle_seq_encode(hand_symbols(text))


# -- naive semantics -------------------------------------------------------------


def naive_term(t, env: dict) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Succ):
        return naive_term(t.arg, env) + 1
    if isinstance(t, Add):
        return naive_term(t.left, env) + naive_term(t.right, env)
    if isinstance(t, Mul):
        return naive_term(t.left, env) * naive_term(t.right, env)
    if isinstance(t, DefFun) and t.name == "l":
        s = oracle_seq_decode(naive_term(t.args[0], env))
        return 0 if s is None else len(s)
    raise NotImplementedError(t)


def naive_truth(f, env: dict) -> bool:
    """Two-valued evaluation; quantifiers must be in bounded shape."""
    if isinstance(f, Eq):
        return naive_term(f.left, env) == naive_term(f.right, env)
    if isinstance(f, Lt):
        return naive_term(f.left, env) < naive_term(f.right, env)
    if isinstance(f, Not):
        return not naive_truth(f.body, env)
    if isinstance(f, And):
        return naive_truth(f.left, env) and naive_truth(f.right, env)
    if isinstance(f, Or):
        return naive_truth(f.left, env) or naive_truth(f.right, env)
    if isinstance(f, Imp):
        return (not naive_truth(f.left, env)) or naive_truth(f.right, env)
    if isinstance(f, Iff):
        return naive_truth(f.left, env) == naive_truth(f.right, env)
    if isinstance(f, DefPred) and f.name == "Code":
        return oracle_seq_decode(naive_term(f.args[0], env)) is not None
    if isinstance(f, Forall):
        guard, body = f.body.left, f.body.right
        n = naive_term(guard.right, env)
        return all(naive_truth(body, {**env, f.var: k}) for k in range(n))
    if isinstance(f, Exists):
        guard, body = f.body.left, f.body.right
        n = naive_term(guard.right, env)
        return any(naive_truth(body, {**env, f.var: k}) for k in range(n))
    raise NotImplementedError(f)


# -- random generators ---------------------------------------------------------------


def small_numeral(n: int):
    t = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


def random_term(rng: random.Random, depth: int, vars_=(0, 1, 2, 3), defined=True):
    if depth <= 0 or rng.random() < 0.3:
        if vars_ and rng.random() < 0.5:
            return Var(rng.choice(vars_))
        return small_numeral(rng.randrange(4))
    r = rng.random()
    sub = lambda: random_term(rng, depth - 1, vars_, defined)  # noqa: E731
    if r < 0.3:
        return Succ(sub())
    if r < 0.55:
        return Add(sub(), sub())
    if r < 0.8 or not defined:
        return Mul(sub(), sub())
    name = rng.choice(["l", "Dec", "Num", "Subs"])
    arity = {"l": 1, "Dec": 2, "Num": 1, "Subs": 3}[name]
    return DefFun(name, tuple(sub() for _ in range(arity)))


def random_formula(rng: random.Random, depth: int, vars_=(0, 1, 2, 3), defined=True):
    """Arbitrary AST of the given depth bound (for printing and coding)."""
    if depth <= 1 or rng.random() < 0.2:
        r = rng.random()
        if defined and r < 0.2:
            name = rng.choice(["Code", "HetSeq", "Prov", "Ele", "Prf"])
            arity = 2 if name in ("Ele", "Prf") else 1
            return DefPred(name, tuple(random_term(rng, 2, vars_, defined) for _ in range(arity)))
        cls = Eq if r < 0.6 else Lt
        return cls(random_term(rng, max(depth - 1, 1), vars_, defined), random_term(rng, max(depth - 1, 1), vars_, defined))
    sub = lambda: random_formula(rng, depth - 1, vars_, defined)  # noqa: E731
    r = rng.random()
    if r < 0.15:
        return Not(sub())
    if r < 0.55:
        return rng.choice([And, Or, Imp, Iff])(sub(), sub())
    v = rng.choice(vars_)
    if r < 0.75:
        bound = random_term(rng, 2, tuple(u for u in vars_ if u != v), defined)
        if rng.random() < 0.5:
            return Forall(v, Imp(Lt(Var(v), bound), sub()))
        return Exists(v, And(Lt(Var(v), bound), sub()))
    return rng.choice([Forall, Exists])(v, sub())


def random_delta0_sentence(rng: random.Random, depth: int = 4, bound: int = 20, scope=(), qdepth: int = 2):
    """A closed Δ0 formula whose quantifier bounds never exceed ``bound``."""
    def term(d):
        if d <= 0 or rng.random() < 0.35:
            if scope and rng.random() < 0.6:
                return Var(rng.choice(scope))
            return small_numeral(rng.randrange(5))
        r = rng.random()
        if r < 0.35:
            return Succ(term(d - 1))
        if r < 0.7:
            return Add(term(d - 1), term(d - 1))
        if r < 0.9:
            return Mul(term(d - 1), term(d - 1))
        return DefFun("l", (term(d - 1),))

    if depth <= 1 or rng.random() < 0.2:
        r = rng.random()
        if r < 0.1:
            return DefPred("Code", (term(2),))
        return (Eq if r < 0.55 else Lt)(term(2), term(2))
    r = rng.random()
    sub = lambda s=scope, q=qdepth: random_delta0_sentence(rng, depth - 1, bound, s, q)  # noqa: E731
    if r < 0.15:
        return Not(sub())
    if r < 0.6 or qdepth == 0:
        return rng.choice([And, Or, Imp, Iff])(sub(), sub())
    v = max(scope, default=-1) + 1
    b = small_numeral(rng.randrange(bound + 1)) if not scope or rng.random() < 0.5 else Var(rng.choice(scope))
    body = sub(scope + (v,), qdepth - 1)
    if rng.random() < 0.5:
        return Forall(v, Imp(Lt(Var(v), b), body))
    return Exists(v, And(Lt(Var(v), b), body))
