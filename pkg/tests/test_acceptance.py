"""Acceptance suite: one check per criterion, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or directly
with ``python tests/test_acceptance.py``. Set ``GODELKIT_FULL_SWEEP=1`` to run
the expansion-vs-oracle sweep over every sequence of length at most 4 with
elements below 50; the default run covers a reduced grid (see
``_sweep_sequences``) so the whole suite stays well under a minute.
"""

from __future__ import annotations

import itertools
import os
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from godelkit.classify import classify_delta0, classify_sigma1  # noqa: E402
from godelkit.cli import run as cli_run  # noqa: E402
from godelkit.coding import (  # noqa: E402
    decode_formula,
    godel_decode,
    godel_encode,
    meta_neg,
    meta_subs,
    num_code,
    seq_decode,
    seq_encode,
    var_code,
)
from godelkit.diagonal import diagonal_term, diagonalize, strip_diagonal, verify_fixed_point  # noqa: E402
from godelkit.evaluator import eval_formula  # noqa: E402
from godelkit.finite_lab import consistent_assignments  # noqa: E402
from godelkit.gallery import FAMILIES, build, recheck  # noqa: E402
from godelkit.grammar import parse, render  # noqa: E402
from godelkit.kernel import check_proof, parse_proof, search_proof  # noqa: E402
from godelkit.registry import eval_defined, expand_definition  # noqa: E402
from godelkit.syntax import (  # noqa: E402
    CaptureError,
    DefPred,
    Exists,
    Not,
    Var,
    free_vars,
    numeral,
    replace_term,
    substitute,
)
from godelkit.truth import TRUE, UNKNOWN  # noqa: E402
from helpers import (  # noqa: E402
    hand_godel,
    naive_truth,
    oracle_seq_decode,
    oracle_seq_encode,
    random_delta0_sentence,
    random_formula,
    random_term,
)
from test_finite_lab import brute as brute_paradox  # noqa: E402
from test_kernel import MUTANTS, REFL_X, ZERO_BY_INST  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"
FULL_SWEEP = os.environ.get("GODELKIT_FULL_SWEEP") == "1"


def _expect(cond, msg):
    if not cond:
        raise AssertionError(msg)


# -- coding round trips ------------------------------------------------------------


def coding_round_trips():
    rng = random.Random(1001)
    for i in range(1000):
        s = [rng.randrange(2**20) for _ in range(rng.randint(0, 50))]
        _expect(seq_decode(seq_encode(s)) == s, f"sequence #{i} {s[:5]}...")
    for i in range(500):
        f = random_formula(rng, rng.randint(1, 6))
        _expect(godel_decode(godel_encode(f)) == f, f"AST #{i} {render(f)}")
    return "1000 sequences, 500 ASTs"


# -- arithmetised syntax -------------------------------------------------------------


def _sweep_sequences():
    if FULL_SWEEP:
        for n in range(5):
            yield from itertools.product(range(50), repeat=n)
        return
    for n in range(3):
        yield from itertools.product(range(50), repeat=n)
    for n in (3, 4):
        yield from itertools.product(range(8), repeat=n)
    rng = random.Random(1002)
    for _ in range(3000):
        yield tuple(rng.randrange(50) for _ in range(rng.choice((3, 4))))


def arithmetised_syntax_fidelity():
    rng = random.Random(1003)
    negs = subs = 0
    while negs < 500:
        f = random_formula(rng, rng.randint(1, 5))
        got = meta_neg(godel_encode(f))
        _expect(got == godel_encode(Not(f)) and decode_formula(got) == Not(f), f"metaNeg on {render(f)}")
        negs += 1
    while subs < 500:
        f = random_formula(rng, rng.randint(1, 5))
        t = random_term(rng, 2)
        v = rng.randrange(4)
        try:
            expected = substitute(f, v, t)
        except CaptureError:
            continue
        got = meta_subs(godel_encode(f), var_code(v), godel_encode(t))
        _expect(decode_formula(got) == expected, f"metaSubs on {render(f)} [v{v}:={render(t)}]")
        subs += 1

    het = expand_definition(DefPred("HetSeq", (Var(0),)))
    ele = expand_definition(DefPred("Ele", (Var(0), Var(1))))
    codes = 0
    for s in _sweep_sequences():
        c = oracle_seq_encode(s)
        distinct = len(set(s)) == len(s)
        _expect(eval_formula(het, {0: c}) is TRUE.of(distinct) is TRUE.of(eval_defined("HetSeq", [c])), f"HetSeq {s}")
        # every x for short sequences; members plus edge non-members beyond that
        probes = range(51) if len(s) <= 2 else set(s) | {0, 49, 50}
        for x in probes:
            _expect(eval_formula(ele, {0: x, 1: c}) is TRUE.of(x in s) is TRUE.of(eval_defined("Ele", [x, c])), f"Ele {x} {s}")
        codes += 1
    for c in (10, 99, 129, 7, 1249):
        _expect(oracle_seq_decode(c) is None, f"{c} should not be a code")
        _expect(eval_formula(het, {0: c}) is not TRUE and eval_formula(ele, {0: 0, 1: c}) is not TRUE, f"non-code {c}")
    scope = "full" if FULL_SWEEP else "reduced"
    return f"500 metaNeg, 500 metaSubs, {codes} sequences ({scope} sweep)"


# -- worked values ---------------------------------------------------------------------


def worked_code_values():
    pins = [
        (hand_godel("(0=0)"), godel_encode(parse("(0=0)")), 269296929279),
        (hand_godel("¬(0=0)"), meta_neg(269296929279), 79269296929279),
        (hand_godel("S0"), num_code(1), 3929),
        (oracle_seq_encode([3, 5]), seq_encode([3, 5]), 4969),
    ]
    for oracle, library, pinned in pins:
        _expect(oracle == library == pinned, f"{oracle} / {library} / {pinned}")
    return "4 values"


# -- diagonal fixed points -----------------------------------------------------------


def _mutate(e):
    theta_code = godel_encode(e.diagonal.theta)
    z = e.diagonal.z
    old = diagonal_term(numeral(theta_code), z)
    new = diagonal_term(numeral(theta_code + 1), z)
    psi = replace_term(e.psi, old, new)
    _expect(psi != e.psi, f"{e.family}: mutation did not change ψ")
    return recheck(e, psi)


def diagonal_fixed_points():
    for fam in FAMILIES:
        e = build(fam)
        _expect(e.fixed_point_ok and verify_fixed_point(e.diagonal), f"{fam} fixed point")
        _expect(godel_encode(e.psi) == e.diagonal.residual, f"{fam} residual")
        _expect(not _mutate(e).fixed_point_ok, f"{fam} mutation accepted")
    rng = random.Random(1004)
    for i in range(25):
        phi = random_formula(rng, rng.randint(1, 4), vars_=(0, 1, 2))
        r = diagonalize(phi, 0, 1)
        _expect(verify_fixed_point(r), f"random φ #{i}")
        if 1 in free_vars(phi):
            _expect(strip_diagonal(r) == phi, f"random φ #{i} strip")
    return "P Q R F, 25 random φ, 4 mutations rejected"


# -- classifier -----------------------------------------------------------------------


def _random_delta0_open(rng):
    return random_delta0_sentence(rng, depth=rng.randint(1, 4), bound=9, scope=(0, 1), qdepth=2)


def _random_sigma1(rng):
    if rng.random() < 0.2:
        matrix = DefPred("Prov", (random_term(rng, 2, (0, 1), defined=False),))
    else:
        matrix = _random_delta0_open(rng)
    f = matrix
    for _ in range(rng.randint(0, 3)):
        f = Exists(rng.randrange(6), f)
    return f


def classifier_properties():
    rng = random.Random(1005)
    for i in range(200):
        f = _random_sigma1(rng)
        _expect(classify_sigma1(f), f"Σ1 by construction #{i}: {render(f)}")
        g = Exists(rng.randrange(6), f)
        _expect(classify_sigma1(g), f"closure under ∃ #{i}: {render(g)}")
    for i in range(200):
        f = _random_delta0_open(rng)
        _expect(classify_delta0(f), f"Δ0 by construction #{i}: {render(f)}")
        _expect(classify_sigma1(f), f"Δ0 ⇒ Σ1 #{i}: {render(f)}")
    return "200 closure cases, 200 Δ0 ⇒ Σ1 cases"


# -- evaluator ----------------------------------------------------------------------------


def _one_unbounded(rng):
    d = random_delta0_sentence(rng, depth=3, bound=5, scope=(0, 1), qdepth=1)
    f = rng.choice([Exists, lambda v, b: Not(Exists(v, Not(b)))])(0, d)
    return f, {1: rng.randrange(30)}


def evaluator_oracle_equivalence():
    rng = random.Random(1006)
    for i in range(300):
        f = random_delta0_sentence(rng, depth=4, bound=20)
        _expect(eval_formula(f, budget=0) is TRUE.of(naive_truth(f, {})), f"Δ0 #{i}: {render(f)}")
    definite = 0
    for i in range(100):
        f, a = _one_unbounded(rng)
        values = [eval_formula(f, a, budget=b) for b in (10, 100, 1000)]
        for lo, hi in zip(values, values[1:]):
            _expect(lo is UNKNOWN or hi is lo, f"monotonicity #{i}: {render(f)} {values}")
        definite += values[-1] is not UNKNOWN
    return f"300 Δ0 sentences, 100 monotone formulas ({definite} definite at 1000)"


# -- proof kernel -------------------------------------------------------------------------


def proof_kernel():
    for text, goal in ((REFL_X, "(v0=v0)"), (ZERO_BY_INST, "(0=0)")):
        p = parse_proof(text)
        _expect(check_proof(p).accepted and p.conclusion == parse(goal), f"hand proof of {goal}")
    _expect(len(MUTANTS) >= 20, "fewer than 20 mutants")
    for i, text in enumerate(MUTANTS):
        _expect(not check_proof(parse_proof(text)).accepted, f"mutant #{i} accepted")
    found = search_proof(parse("(0=0)"))
    _expect(found is not None and check_proof(found).accepted, "search for (0=0)")
    _expect(found.conclusion == parse("(0=0)"), "search conclusion")
    _expect(eval_defined("Prov", [godel_encode(parse("(0=0)"))]) is TRUE, "Prov((0=0))")
    return f"2 hand proofs, {len(MUTANTS)} mutants rejected, search {len(found.lines)} line(s), Prov True"


# -- finite lab ----------------------------------------------------------------------------


def finite_lab_counts():
    for n in range(1, 13):
        counts = {k: len(consistent_assignments(k, n)) for k in (1, 2, 3)}
        for k in (1, 2, 3):
            _expect(consistent_assignments(k, n) == brute_paradox(k, n), f"kind {k} n={n} vs brute force")
        _expect(counts[1] == 0, f"SomeoneWrong n={n}: {counts[1]}")
        _expect(counts[2] == (n if n >= 2 else 1), f"SomeoneElseWrong n={n}: {counts[2]}")
        if n % 2 == 0:
            half = tuple(i < n // 2 for i in range(n))
            _expect(consistent_assignments(3, n) == [half], f"AtLeastK n={n}")
        else:
            _expect(counts[3] == 0, f"AtLeastK n={n}: {counts[3]}")
    return "n = 1..12, three kinds"


# -- CLI --------------------------------------------------------------------------------


def _cli_output(argv):
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_run(argv)
    return code, out.getvalue()


def cli_end_to_end():
    cases = [
        (["encode", "(0=0)"], "269296929279\n"),
        (["gallery", "build", "P"], (GOLDEN / "gallery_P.txt").read_text(encoding="utf-8")),
        (["finite-lab", "--kind", "3", "--n", "4", "--table"],
         "kind=AtLeastK n=4 models=1 classification=determinate\nT T F F\n"),
    ]
    for argv, expected in cases:
        code, out = _cli_output(argv)
        _expect(code == 0 and out == expected, f"{' '.join(argv)}: exit {code}, {out[:60]!r}")
    _expect("fixedPointOk=true\n" in cases[1][1], "golden gallery report lacks fixedPointOk=true")
    return "3 commands byte-exact"


CRITERIA = [
    ("coding round trips", coding_round_trips),
    ("arithmetised syntax fidelity", arithmetised_syntax_fidelity),
    ("worked code values", worked_code_values),
    ("diagonal fixed points", diagonal_fixed_points),
    ("classifier properties", classifier_properties),
    ("evaluator oracle equivalence", evaluator_oracle_equivalence),
    ("proof kernel", proof_kernel),
    ("finite lab counts", finite_lab_counts),
    ("CLI end to end", cli_end_to_end),
]


def _run(title, check):
    start = time.perf_counter()
    try:
        detail, ok = check(), True
    except AssertionError as exc:
        detail, ok = str(exc), False
    line = f"{'PASS' if ok else 'FAIL'} {title}: {detail} [{time.perf_counter() - start:.1f}s]"
    return ok, line


@pytest.mark.parametrize("title, check", CRITERIA, ids=[t.replace(" ", "_") for t, _ in CRITERIA])
def test_acceptance(title, check, capsys):
    ok, line = _run(title, check)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [_run(t, c) for t, c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
