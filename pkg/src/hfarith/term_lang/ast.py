"""Syntax trees for terms and bounded formulas.

Binder positions are carried for error messages but ignored by equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Pair:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Power:
    arg: "Term"


@dataclass(frozen=True)
class Union_:
    arg: "Term"


@dataclass(frozen=True)
class Eps:
    arg: "Term"


@dataclass(frozen=True)
class Compr:
    """``{x in source : formula}``"""

    var: str
    source: "Term"
    formula: "Formula"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Repl:
    """``{body : x in source}``"""

    body: "Term"
    var: str
    source: "Term"
    pos: int = field(default=0, compare=False)


Term = Union[Var, Empty, Pair, Power, Union_, Eps, Compr, Repl]


@dataclass(frozen=True)
class In:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class All:
    var: str
    source: Term
    body: "Formula"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Some:
    var: str
    source: Term
    body: "Formula"
    pos: int = field(default=0, compare=False)


Formula = Union[In, Eq, Sub, Not, And, Or, Implies, All, Some]

TERM_TYPES = (Var, Empty, Pair, Power, Union_, Eps, Compr, Repl)
FORMULA_TYPES = (In, Eq, Sub, Not, And, Or, Implies, All, Some)


def free_vars(node) -> frozenset[str]:
    if isinstance(node, Var):
        return frozenset((node.name,))
    if isinstance(node, Empty):
        return frozenset()
    if isinstance(node, (Power, Union_, Eps, Not)):
        return free_vars(node.arg)
    if isinstance(node, (Pair, In, Eq, Sub, And, Or, Implies)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Compr):
        return free_vars(node.source) | (free_vars(node.formula) - {node.var})
    if isinstance(node, Repl):
        return free_vars(node.source) | (free_vars(node.body) - {node.var})
    if isinstance(node, (All, Some)):
        return free_vars(node.source) | (free_vars(node.body) - {node.var})
    raise TypeError(f"not a syntax node: {node!r}")


def binders(node):
    """Yield ``(name, pos, source, scope)`` for every binder in the tree."""
    if isinstance(node, (Var, Empty)):
        return
    if isinstance(node, (Power, Union_, Eps, Not)):
        yield from binders(node.arg)
    elif isinstance(node, (Pair, In, Eq, Sub, And, Or, Implies)):
        yield from binders(node.left)
        yield from binders(node.right)
    elif isinstance(node, Compr):
        yield node.var, node.pos, node.source, node.formula
        yield from binders(node.source)
        yield from binders(node.formula)
    elif isinstance(node, Repl):
        yield node.var, node.pos, node.source, node.body
        yield from binders(node.source)
        yield from binders(node.body)
    elif isinstance(node, (All, Some)):
        yield node.var, node.pos, node.source, node.body
        yield from binders(node.source)
        yield from binders(node.body)
