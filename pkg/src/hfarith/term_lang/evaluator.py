"""Evaluation in the standard model of hereditarily finite sets.

Comprehension and replacement hand closures to the kernel operations, so a
term-language filter and a host predicate go through the same code path.

A :class:`Definitions` table holds named terms and formulas, with optional
parameters.  Variables not bound in the environment are looked up there;
``call`` instantiates a parametrised definition.  Definitions are metalevel
shorthand: expanding them never changes the language being evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .. import hf
from ..errors import HFError
from ..hf import HFSet
from .ast import (
    All, And, Compr, Empty, Eps, Eq, FORMULA_TYPES, Implies, In, Not, Or, Pair,
    Power, Repl, Some, Sub, Union_, Var, free_vars,
)
from .parser import parse_formula, parse_term


class UnboundVariable(HFError):
    pass


@dataclass(frozen=True)
class Definition:
    params: tuple[str, ...]
    body: object   # Term or Formula


@dataclass
class Definitions:
    table: dict[str, Definition] = field(default_factory=dict)

    def define(self, name: str, text: str, params: tuple[str, ...] = (), formula: bool = False) -> Definition:
        body = parse_formula(text) if formula else parse_term(text)
        extra = free_vars(body) - set(params) - set(self.table)
        if extra:
            raise UnboundVariable(f"definition {name!r} has free variables {sorted(extra)}")
        d = Definition(tuple(params), body)
        self.table[name] = d
        return d

    def call(self, name: str, *args: HFSet, env: Mapping[str, HFSet] | None = None):
        d = self.table[name]
        if len(args) != len(d.params):
            raise HFError(f"{name} takes {len(d.params)} arguments")
        local = dict(env or {})
        local.update(zip(d.params, args))
        if isinstance(d.body, FORMULA_TYPES):
            return eval_formula(d.body, local, self)
        return eval_term(d.body, local, self)


@dataclass(frozen=True)
class TermClosure:
    """``λx. body`` over a fixed environment."""

    var: str
    body: object
    env: Mapping[str, HFSet]
    defs: Definitions | None = None

    def __call__(self, x: HFSet) -> HFSet:
        return eval_term(self.body, {**self.env, self.var: x}, self.defs)


@dataclass(frozen=True)
class FormulaClosure:
    var: str
    body: object
    env: Mapping[str, HFSet]
    defs: Definitions | None = None

    def __call__(self, x: HFSet) -> bool:
        return eval_formula(self.body, {**self.env, self.var: x}, self.defs)


def _lookup(name: str, env: Mapping[str, HFSet], defs: Definitions | None) -> HFSet:
    if name in env:
        return env[name]
    if defs is not None and name in defs.table and not defs.table[name].params:
        return defs.call(name, env=env)
    raise UnboundVariable(f"unbound variable {name!r}")


def eval_term(t, env: Mapping[str, HFSet], defs: Definitions | None = None) -> HFSet:
    if isinstance(t, Var):
        return _lookup(t.name, env, defs)
    if isinstance(t, Empty):
        return hf.EMPTY
    if isinstance(t, Pair):
        return hf.pair_set(eval_term(t.left, env, defs), eval_term(t.right, env, defs))
    if isinstance(t, Power):
        return hf.power_set(eval_term(t.arg, env, defs))
    if isinstance(t, Union_):
        return hf.union_all(eval_term(t.arg, env, defs))
    if isinstance(t, Eps):
        return hf.epsilon_fan(eval_term(t.arg, env, defs))
    if isinstance(t, Compr):
        src = eval_term(t.source, env, defs)
        return hf.comprehension(src, FormulaClosure(t.var, t.formula, env, defs))
    if isinstance(t, Repl):
        src = eval_term(t.source, env, defs)
        return hf.replacement(src, TermClosure(t.var, t.body, env, defs))
    raise TypeError(f"not a term: {t!r}")


def eval_formula(f, env: Mapping[str, HFSet], defs: Definitions | None = None) -> bool:
    if isinstance(f, In):
        return eval_term(f.left, env, defs) in eval_term(f.right, env, defs)
    if isinstance(f, Eq):
        return eval_term(f.left, env, defs) is eval_term(f.right, env, defs)
    if isinstance(f, Sub):
        return hf.is_subset(eval_term(f.left, env, defs), eval_term(f.right, env, defs))
    if isinstance(f, Not):
        return not eval_formula(f.arg, env, defs)
    if isinstance(f, And):
        return eval_formula(f.left, env, defs) and eval_formula(f.right, env, defs)
    if isinstance(f, Or):
        return eval_formula(f.left, env, defs) or eval_formula(f.right, env, defs)
    if isinstance(f, Implies):
        return (not eval_formula(f.left, env, defs)) or eval_formula(f.right, env, defs)
    if isinstance(f, All):
        body = FormulaClosure(f.var, f.body, env, defs)
        return all(body(x) for x in eval_term(f.source, env, defs))
    if isinstance(f, Some):
        body = FormulaClosure(f.var, f.body, env, defs)
        return any(body(x) for x in eval_term(f.source, env, defs))
    raise TypeError(f"not a formula: {f!r}")


def expand_quantifiers(node):
    """Rewrite bounded quantifiers by their definitions:
    ``(all x in S) A`` becomes ``S sub {x in S : A}`` and ``(some x in S) A``
    becomes ``~(S sub {x in S : ~A})``.
    """
    if isinstance(node, (Var, Empty)):
        return node
    if isinstance(node, (Power, Union_, Eps, Not)):
        return type(node)(expand_quantifiers(node.arg))
    if isinstance(node, (Pair, In, Eq, Sub, And, Or, Implies)):
        return type(node)(expand_quantifiers(node.left), expand_quantifiers(node.right))
    if isinstance(node, Compr):
        return Compr(node.var, expand_quantifiers(node.source), expand_quantifiers(node.formula), node.pos)
    if isinstance(node, Repl):
        return Repl(expand_quantifiers(node.body), node.var, expand_quantifiers(node.source), node.pos)
    src = expand_quantifiers(node.source)
    body = expand_quantifiers(node.body)
    if isinstance(node, All):
        return Sub(src, Compr(node.var, src, body, node.pos))
    if isinstance(node, Some):
        return Not(Sub(src, Compr(node.var, src, Not(body), node.pos)))
    raise TypeError(f"not a syntax node: {node!r}")
