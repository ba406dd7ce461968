"""Terms and bounded formulas: parsing, evaluation, static bounds."""

from .analyzer import bound_of, rank_bound_of
from .ast import free_vars
from .corpus import CORPUS
from .evaluator import (
    Definitions, FormulaClosure, TermClosure, UnboundVariable, eval_formula,
    eval_term, expand_quantifiers,
)
from .parser import parse_formula, parse_term
from .render import render, render_formula, render_term

__all__ = [
    "CORPUS", "Definitions", "FormulaClosure", "TermClosure", "UnboundVariable",
    "bound_of", "eval_formula", "eval_term", "expand_quantifiers", "free_vars",
    "parse_formula", "parse_term", "rank_bound_of", "render", "render_formula",
    "render_term",
]
