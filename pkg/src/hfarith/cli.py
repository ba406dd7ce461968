"""Command line: ``hfarith {eval,enumerate,analyze,check,code}``.

Exit status: 0 success, 1 domain error, 2 usage or syntax error, 3 failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hf
from .config import env_budget, limits, parse_budget, split_budget
from .errors import HFError, ParseError
from .hf import HFSet
from .linord import LinearOrdering
from .systems import get_system
from .term_lang import Definitions, bound_of, eval_formula, eval_term, parse_formula, parse_term, rank_bound_of
from .verify import SUITE_DEFAULTS, SUITES, run_suite

ELIDE_CHARS = 120
CODE_BITS_SHOWN = 256


class UsageError(Exception):
    pass


def _show_set(s: HFSet) -> str:
    text = hf.render(s) if s.size <= 64 else None
    if text is None or len(text) > ELIDE_CHARS:
        text = f"<{s.size} members, rank {s.rank}>"
    return text


def _show_code(s: HFSet) -> str:
    if s.code_is_small() and s.code.bit_length() <= CODE_BITS_SHOWN:
        return f"#{s.code}"
    return "#<large>"


def _term_text(sys, t) -> tuple[str, str | None]:
    """Display form and decimal code (None when too large) of a system term."""
    if sys.render_term is not None:
        text = sys.render_term(t)
        if isinstance(t, int):
            return text, None
    elif isinstance(t, LinearOrdering):
        text = "[" + ", ".join(hf.render(x) for x in t.terms) + "]"
        if len(text) > ELIDE_CHARS:
            text = f"<ordering of {len(t)} terms>"
    elif isinstance(t, HFSet):
        text = _show_set(t)
    else:
        text = str(t)
    s = sys.to_hf(t)
    code = str(s.code) if s.code_is_small() and s.code.bit_length() <= CODE_BITS_SHOWN else None
    return text, code


def _parse_binding(text: str) -> tuple[str, str]:
    name, eq, value = text.partition("=")
    if not eq or not name.strip():
        raise UsageError(f"binding must look like name=value, got {text!r}")
    return name.strip(), value.strip()


def cmd_eval(args, out) -> int:
    env = {}
    for b in args.let or []:
        name, value = _parse_binding(b)
        env[name] = hf.parse_hf(value)
    defs = Definitions()
    for d in args.define or []:
        name, value = _parse_binding(d)
        defs.define(name, value)
    if args.formula:
        f = parse_formula(args.text)
        val = eval_formula(f, env, defs)
        if args.json:
            out.write(json.dumps({"formula": args.text, "value": val}) + "\n")
        else:
            out.write(("true" if val else "false") + "\n")
        return 0
    t = parse_term(args.text)
    v = eval_term(t, env, defs)
    if args.json:
        out.write(json.dumps({"term": args.text, "value": hf.to_json(v)}) + "\n")
    else:
        out.write(f"{_show_set(v)}  {_show_code(v)}\n")
    return 0


def cmd_enumerate(args, out) -> int:
    sys_ = get_system(args.system)
    terms = sys_.terms(args.n)
    if args.json:
        rows = [_term_text(sys_, t) for t in terms]
        out.write(json.dumps({
            "system": sys_.name, "count": len(terms),
            "codes": [c for _, c in rows], "terms": [t for t, _ in rows],
        }) + "\n")
        return 0
    for i, t in enumerate(terms):
        text, code = _term_text(sys_, t)
        out.write(f"{i}\t{text}" + (f"  #{code}" if code is not None else "") + "\n")
    return 0


def cmd_analyze(args, out) -> int:
    t = parse_term(args.text)
    k, rk = bound_of(t), rank_bound_of(t)
    if args.json:
        out.write(json.dumps({"term": args.text, "k": k, "rank_k": rk}) + "\n")
    else:
        out.write(f"k={k}, rank_k={rk}\n")
    return 0


def cmd_check(args, out) -> int:
    budget = {**args.budget_dict}
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = 0
    lim, _ = split_budget(budget)
    for name in names:
        if args.suite == "all":
            # suite parameters only go to the suites that declare them
            mine = {k: v for k, v in budget.items() if k in lim or k in SUITE_DEFAULTS[name]}
        else:
            mine = budget
        report = run_suite(name, mine, seed=args.seed)
        # the report is always JSON lines; --json changes nothing here
        for line in report.json_lines():
            out.write(line + "\n")
        if not report.passed:
            status = 3
    return status


def cmd_code(args, out) -> int:
    if args.action == "decode":
        try:
            n = int(args.value)
        except ValueError:
            raise UsageError(f"not a natural number: {args.value!r}")
        if n < 0:
            raise UsageError("codes are natural numbers")
        s = hf.decode(n)
    else:
        s = hf.parse_hf(args.value)
    if args.json:
        out.write(json.dumps(hf.to_json(s)) + "\n")
    elif args.action == "decode":
        out.write(hf.render(s) + "\n")
    else:
        out.write(f"{s.code}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hfarith", description="Hereditarily finite sets and natural number systems.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--budget", default=None, help="limits and suite parameters, k=v,...")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a term (or formula with --formula)")
    e.add_argument("text")
    e.add_argument("--let", action="append", metavar="NAME=SET", help="bind a variable to a set ({..} or #n)")
    e.add_argument("--define", action="append", metavar="NAME=TERM", help="name a closed term")
    e.add_argument("--formula", action="store_true", help="treat the text as a formula")
    e.set_defaults(func=cmd_eval)

    n = sub.add_parser("enumerate", help="list the first terms of a system")
    n.add_argument("system", help="vn, z, ch, lex, ack, ack0, base:<sys>:<n>, len:<sys>:<n>, ackphi:<phi>:<K>")
    n.add_argument("-n", type=int, default=10)
    n.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("analyze", help="static power-level and rank bounds of a term")
    a.add_argument("text")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", choices=list(SUITES) + ["all"])
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("code", help="convert between sets and Ackermann codes")
    k.add_argument("action", choices=["encode", "decode"])
    k.add_argument("value")
    k.set_defaults(func=cmd_code)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        budget = env_budget()
        explicit = parse_budget(args.budget) if args.budget else {}
        budget.update(explicit)
        lim, params = split_budget(budget)
        if args.command != "check":
            stray = set(split_budget(explicit)[1])
            if stray:
                raise UsageError(f"unknown budget keys: {sorted(stray)}")
        args.budget_dict = budget
        with limits(**lim):
            return args.func(args, out)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except HFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
