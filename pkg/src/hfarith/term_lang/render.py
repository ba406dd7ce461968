"""Canonical text for syntax trees; ``parse(render(t)) == t``."""

from __future__ import annotations

from .ast import (
    All, And, Compr, Empty, Eps, Eq, Implies, In, Not, Or, Pair, Power, Repl,
    Some, Sub, Union_, Var,
)

_BINARY = {And: "&", Or: "|", Implies: "->"}
_ATOMS = {In: "in", Eq: "=", Sub: "sub"}
_UNARY_TERMS = {Power: "P", Union_: "U", Eps: "E"}


def render_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Empty):
        return "O"
    if type(t) in _UNARY_TERMS:
        return f"{_UNARY_TERMS[type(t)]}({render_term(t.arg)})"
    if isinstance(t, Pair):
        return f"{{{render_term(t.left)}, {render_term(t.right)}}}"
    if isinstance(t, Compr):
        return f"{{{t.var} in {render_term(t.source)} : {render_formula(t.formula)}}}"
    if isinstance(t, Repl):
        return f"{{{render_term(t.body)} : {t.var} in {render_term(t.source)}}}"
    raise TypeError(f"not a term: {t!r}")


def _tight(f) -> str:
    """Render ``f`` so it parses as a single unary formula."""
    s = render_formula(f)
    return f"({s})" if type(f) in _BINARY else s


def render_formula(f) -> str:
    if type(f) in _ATOMS:
        return f"{render_term(f.left)} {_ATOMS[type(f)]} {render_term(f.right)}"
    if isinstance(f, Not):
        return "~" + _tight(f.arg)
    if isinstance(f, (All, Some)):
        q = "all" if isinstance(f, All) else "some"
        return f"({q} {f.var} in {render_term(f.source)}) {_tight(f.body)}"
    if isinstance(f, Implies):
        # right-associative: only a nested implication on the left needs parentheses
        return f"{_tight(f.left)} -> {render_formula(f.right) if isinstance(f.right, Implies) else _tight(f.right)}"
    if isinstance(f, (And, Or)):
        return f"{_tight(f.left)} {_BINARY[type(f)]} {_tight(f.right)}"
    raise TypeError(f"not a formula: {f!r}")


def render(node) -> str:
    if type(node) in (In, Eq, Sub, Not, And, Or, Implies, All, Some):
        return render_formula(node)
    return render_term(node)
