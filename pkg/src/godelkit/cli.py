"""Command-line front end: ``godelkit <command> ...``.

Exit status 0 on success, 1 on a usage error, 2 on a domain error (bad
formula, capture, not a code, rejected proof) and 3 when a budget runs out
before a requested definite answer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import finite_lab, gallery
from .classify import classify, classify_delta0, classify_sigma1
from .coding import godel_decode, godel_encode, seq_decode, seq_encode
from .diagonal import diagonalize, verify_fixed_point
from .evaluator import DEFAULT_BUDGET, UnassignedVariableError, evaluate
from .grammar import parse, parse_expr, parse_term, render
from .kernel import check_proof, format_proof, parse_proof, search_proof
from .registry import standard_registry
from .syntax import DefFun, DefPred, Not, Succ, Var, Zero, substitute
from .truth import UNKNOWN

USAGE, DOMAIN, EXHAUSTED = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _var(text: str) -> int:
    t = text[1:] if text.startswith("v") else text
    if not t.isdigit():
        raise argparse.ArgumentTypeError(f"not a variable: {text!r}")
    return int(t)


def _nat(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _assignment(text: str) -> tuple[int, int]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected v<i>=<n>, got {text!r}")
    return _var(name), _nat(value)


def sexpr(e) -> str:
    """Fully bracketed tree form, one constructor per bracket."""
    match e:
        case Zero():
            return "0"
        case Var(i):
            return f"v{i}"
        case Succ(a):
            return f"(S {sexpr(a)})"
        case DefFun(name, args) | DefPred(name, args):
            return f"({name} {' '.join(sexpr(a) for a in args)})"
        case Not(b):
            return f"(Not {sexpr(b)})"
    name = type(e).__name__
    if hasattr(e, "var"):
        return f"({name} v{e.var} {sexpr(e.body)})"
    return f"({name} {sexpr(e.left)} {sexpr(e.right)})"


def tree(e) -> dict:
    match e:
        case Zero():
            return {"node": "Zero"}
        case Var(i):
            return {"node": "Var", "index": i}
        case DefFun(name, args) | DefPred(name, args):
            return {"node": type(e).__name__, "name": name, "args": [tree(a) for a in args]}
        case Succ(a) | Not(a):
            return {"node": type(e).__name__, "args": [tree(a)]}
    if hasattr(e, "var"):
        return {"node": type(e).__name__, "var": e.var, "body": tree(e.body)}
    return {"node": type(e).__name__, "args": [tree(e.left), tree(e.right)]}


def _emit(args, text: str, data=None) -> None:
    if args.json and data is not None:
        sys.stdout.write(json.dumps(data, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands ----------------------------------------------------------------


def cmd_parse(args):
    e = parse_expr(args.text)
    _emit(args, sexpr(e), tree(e))


def cmd_print(args):
    _emit(args, render(parse_expr(args.text)))


def cmd_encode(args):
    if args.seq:
        items = [s for s in args.text.replace(" ", "").split(",") if s]
        if not all(s.isdigit() for s in items):
            raise ValueError(f"not a list of naturals: {args.text!r}")
        print(seq_encode(int(s) for s in items))
    else:
        print(godel_encode(parse_expr(args.text)))


def cmd_decode(args):
    c = _nat(args.code)
    if args.seq:
        elems = seq_decode(c)
        data = {"length": len(elems), "elements": elems, "indexBase": args.index_base}
        lines = [f"length={len(elems)}"] + [f"{k + args.index_base}: {x}" for k, x in enumerate(elems)]
        _emit(args, "\n".join(lines), data)
    else:
        _emit(args, render(godel_decode(c)))


def cmd_classify(args):
    f = parse(args.text)
    data = {"class": classify(f), "delta0": classify_delta0(f), "sigma1": classify_sigma1(f)}
    _emit(args, data["class"], data)


def cmd_subst(args):
    f = parse_expr(args.text)
    t = parse_term(args.term)
    _emit(args, render(substitute(f, args.var, t)))


def cmd_eval(args):
    f = parse(args.text)
    r = evaluate(f, dict(args.assign), budget=args.budget)
    data = {"value": str(r.value), "witness": r.witness, "steps": r.steps}
    lines = [f"value={r.value}"]
    if r.witness is not None:
        lines.append(f"witness={r.witness}")
    lines.append(f"steps={r.steps}")
    _emit(args, "\n".join(lines), data)
    if args.definite and r.value is UNKNOWN:
        print(f"no definite value within budget {args.budget}", file=sys.stderr)
        return EXHAUSTED
    return 0


def cmd_check_proof(args):
    text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    p = parse_proof(text)
    v = check_proof(p)
    if v.accepted:
        _emit(args, f"accepted\nconclusion={render(p.conclusion)}", {"accepted": True, "conclusion": render(p.conclusion)})
        return 0
    _emit(args, f"rejected\nline={v.line}\nreason={v.reason}", {"accepted": False, "line": v.line, "reason": v.reason})
    return DOMAIN


def cmd_search_proof(args):
    goal = parse(args.text)
    p = search_proof(goal, args.budget)
    if p is None:
        print(f"no proof of {render(goal)} within budget {args.budget}", file=sys.stderr)
        return EXHAUSTED
    sys.stdout.write(format_proof(p))
    return 0


def cmd_diagonalize(args):
    d = diagonalize(parse(args.text), args.x, args.y)
    data = {
        "psi": render(d.psi),
        "z": d.z,
        "code": str(d.self_code),
        "residual": str(d.residual),
        "fixedPointOk": verify_fixed_point(d),
    }
    lines = [
        f"fixedPointOk={'true' if data['fixedPointOk'] else 'false'}",
        f"z=v{d.z}",
        f"code={data['code']}",
        f"residual={data['residual']}",
        f"psi={data['psi']}",
    ]
    _emit(args, "\n".join(lines), data)


def cmd_gallery(args):
    if args.action == "lnp":
        _emit(args, render(gallery.lnp_instance(parse(args.formula), args.var)))
        return 0
    instances = gallery.DEFAULT_INSTANCES if args.instance is None else (args.instance,)
    rec = gallery.report(gallery.build(args.family, instances))
    sys.stdout.write(gallery.format_report_json(rec) if args.json else gallery.format_report(rec))
    return 0


def cmd_finite_lab(args):
    r = finite_lab.run(args.kind, args.n)
    data = {
        "kind": r.kind.label,
        "n": r.n,
        "models": r.count,
        "classification": r.classification,
        "table": [["T" if b else "F" for b in m] for m in r.models] if args.table else None,
    }
    _emit(args, r.format(args.table), data)


def cmd_registry(args):
    rows = standard_registry().table()
    lines = [f"{r['code']} {r['name']} {r['kind']}/{r['arity']} {r['classification']}" for r in rows]
    _emit(args, "\n".join(lines), rows)


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=_nat, default=DEFAULT_BUDGET, help="search steps (default %(default)s)")

    p = _Parser(prog="godelkit", description="Gödel coding, diagonal fixed points and paradox sentences for PA.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, parents=(common,)):
        sp = sub.add_parser(name, help=help, parents=list(parents))
        sp.set_defaults(func=func)
        return sp

    add("parse", cmd_parse, "show the syntax tree").add_argument("text")
    add("print", cmd_print, "print in canonical form").add_argument("text")

    sp = add("encode", cmd_encode, "Gödel number of a term or formula")
    sp.add_argument("text")
    sp.add_argument("--seq", action="store_true", help="TEXT is a comma-separated list to sequence-encode")

    sp = add("decode", cmd_decode, "expression (or sequence) with a given code")
    sp.add_argument("code")
    sp.add_argument("--seq", action="store_true", help="decode as a plain sequence code")
    sp.add_argument("--index-base", type=int, choices=(0, 1), default=0, help="first index shown for --seq")

    add("classify", cmd_classify, "Delta0 / Sigma1 / other").add_argument("text")

    sp = add("subst", cmd_subst, "capture-checked substitution")
    sp.add_argument("text")
    sp.add_argument("var", type=_var)
    sp.add_argument("term")

    sp = add("eval", cmd_eval, "three-valued evaluation", (common, budget))
    sp.add_argument("text")
    sp.add_argument("--assign", type=_assignment, action="append", default=[], metavar="vI=N")
    sp.add_argument("--definite", action="store_true", help="exit 3 if the value stays Unknown")

    add("check-proof", cmd_check_proof, "check a proof file ('-' for stdin)").add_argument("file")
    add("search-proof", cmd_search_proof, "bounded proof search", (common, budget)).add_argument("text")

    sp = add("diagonalize", cmd_diagonalize, "fixed point of φ(x, y)")
    sp.add_argument("text")
    sp.add_argument("--x", type=_var, default=0)
    sp.add_argument("--y", type=_var, default=1)

    sp = add("gallery", cmd_gallery, "paradox sentence families")
    gsub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gb = gsub.add_parser("build", help="build P, Q, R or F", parents=[common])
    gb.add_argument("family", choices=gallery.FAMILIES)
    gb.add_argument("--instance", type=_nat, default=None, metavar="K")
    gl = gsub.add_parser("lnp", help="least number principle instance", parents=[common])
    gl.add_argument("formula")
    gl.add_argument("--var", type=_var, default=0)

    sp = add("finite-lab", cmd_finite_lab, "finite paradox models")
    sp.add_argument("--kind", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--table", action="store_true")

    add("registry", cmd_registry, "defined symbols and their codes")
    return p


def run(argv=None) -> int:
    """Run one command and return its exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args) or 0
    except UnassignedVariableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN
    except BrokenPipeError:
        # reader went away (e.g. piped into head); stay quiet
        sys.stdout = open(os.devnull, "w")
        return 0
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN


def main(argv=None) -> None:
    sys.exit(run(argv))
