"""Recursive-descent parser for terms and formulas.

Terms and formulas are parsed by mutually recursive functions.  Binary
connectives bind ``&`` tighter than ``|`` tighter than ``->``; ``->`` groups to
the right.  A negation or a quantifier applies to the smallest formula that
follows it, so ``(all x in a) F & G`` reads as ``((all x in a) F) & G``.
``{t}`` is accepted as shorthand for ``{t, t}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .ast import (
    All, And, Compr, Empty, Eps, Eq, Formula, Implies, In, Not, Or, Pair, Power,
    Repl, Some, Sub, Term, Union_, Var, free_vars,
)

RESERVED = frozenset({"in", "sub", "all", "some"})
CONSTRUCTORS = {"P": Power, "U": Union_, "E": Eps}

_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<ident>[a-z][a-z0-9_]*)|(?P<upper>[A-Z][A-Za-z0-9_]*)"
    r"|(?P<sym>[{}(),:~&|=])|(?P<bad>\S))"
)


@dataclass(frozen=True)
class Token:
    kind: str    # "ident", "kw", "sym", "end"
    text: str
    col: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.lastgroup is None:
            break
        col = m.start(m.lastgroup) + 1
        tok = m.group(m.lastgroup)
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {tok!r}", col)
        if m.lastgroup == "upper":
            if tok != "O" and tok not in CONSTRUCTORS:
                raise ParseError(f"unknown constructor {tok!r}", col)
            out.append(Token("kw", tok, col))
        elif m.lastgroup == "ident":
            out.append(Token("kw" if tok in RESERVED else "ident", tok, col))
        else:
            out.append(Token("sym", tok, col))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, what: str) -> ParseError:
        t = self.cur
        found = "end of input" if t.kind == "end" else repr(t.text)
        return ParseError(f"expected {what}, found {found}", t.col)

    def at(self, text: str) -> bool:
        return self.cur.kind in ("sym", "kw") and self.cur.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.fail(repr(text))
        tok = self.cur
        self.i += 1
        return tok

    def ident(self) -> Token:
        if self.cur.kind != "ident":
            raise self.fail("a variable")
        tok = self.cur
        self.i += 1
        return tok

    def finish(self) -> None:
        if self.cur.kind != "end":
            raise self.fail("end of input")

    # terms

    def term(self) -> Term:
        t = self.cur
        if t.kind == "ident":
            self.i += 1
            return Var(t.text)
        if t.kind == "kw" and t.text == "O":
            self.i += 1
            return Empty()
        if t.kind == "kw" and t.text in CONSTRUCTORS:
            self.i += 1
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return CONSTRUCTORS[t.text](arg)
        if self.at("{"):
            return self.braces()
        raise self.fail("a term")

    def braces(self) -> Term:
        self.expect("{")
        if self.cur.kind == "ident" and self.peek().text == "in" and self.peek().kind == "kw":
            var = self.ident()
            self.expect("in")
            src = self.term()
            self.expect(":")
            body = self.formula()
            self.expect("}")
            return Compr(var.text, src, body, var.col)
        first = self.term()
        if self.at(","):
            self.i += 1
            second = self.term()
            self.expect("}")
            return Pair(first, second)
        if self.at(":"):
            self.i += 1
            var = self.ident()
            self.expect("in")
            src = self.term()
            self.expect("}")
            return Repl(first, var.text, src, var.col)
        self.expect("}")
        return Pair(first, first)

    # formulas

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.at("->"):
            self.i += 1
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.at("|"):
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.at("&"):
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.at("~"):
            self.i += 1
            return Not(self.unary())
        if self.at("("):
            nxt = self.peek()
            if nxt.kind == "kw" and nxt.text in ("all", "some"):
                self.i += 2
                var = self.ident()
                self.expect("in")
                src = self.term()
                self.expect(")")
                body = self.unary()
                cls = All if nxt.text == "all" else Some
                return cls(var.text, src, body, var.col)
            # a parenthesised formula; terms never start with "("
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()

    def atom(self) -> Formula:
        left = self.term()
        for op, cls in (("in", In), ("=", Eq), ("sub", Sub)):
            if self.at(op):
                self.i += 1
                return cls(left, self.term())
        raise self.fail("'in', '=' or 'sub'")


def check_hygiene(node) -> None:
    """Each binder must differ from the variables free in its scope's context:
    a bound name may not shadow another binder in scope nor a free variable of
    the whole expression.
    """
    free = free_vars(node)
    _hygiene(node, free, frozenset())


def _hygiene(node, free: frozenset, bound: frozenset) -> None:
    if isinstance(node, (Var, Empty)):
        return
    if isinstance(node, (Power, Union_, Eps, Not)):
        _hygiene(node.arg, free, bound)
        return
    if isinstance(node, (Pair, In, Eq, Sub, And, Or, Implies)):
        _hygiene(node.left, free, bound)
        _hygiene(node.right, free, bound)
        return
    scope = node.formula if isinstance(node, Compr) else node.body
    if node.var in free or node.var in bound:
        raise ParseError(f"binder {node.var!r} clashes with a variable in scope", node.pos)
    _hygiene(node.source, free, bound)
    _hygiene(scope, free, bound | {node.var})


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.finish()
    check_hygiene(t)
    return t


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.finish()
    check_hygiene(f)
    return f


