"""Lexicographic orderings, the LEX and ACK systems, and ACK₀.

``Lex(L)`` orders the subsets of ``Field(L)``: ``X`` comes before ``Y`` when the
L-greatest element of ``X △ Y`` lies in ``Y``.  Reading membership of the i-th
term of ``L`` as bit i, this is numeric order, so the i-th element of ``Lex(L)``
is the subset picked out by the bits of ``i``.  :func:`lex_leq` keeps the
symmetric-difference definition for cross-checking.

ACK terms are the orderings ``l_k = [s_0, ..., s_{k-1}]`` where ``s_i`` is the
i-th set in Ackermann order.  LEX terms are the ACK terms ``l_0, l_1, l_2, l_4,
l_16, ...``; the LEX term with ``j`` steps has ``lex_size(j)`` terms.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass

from .. import hf
from ..config import get_limits
from ..errors import HFError, NotInFieldError, TooLargeError
from ..hf import EMPTY, HFSet
from ..linord import EMPTY_ORDER, LinearOrdering, from_terms, is_initial_segment
from .core import IterationSystem


def lex_leq(lo: LinearOrdering, x: HFSet, y: HFSet) -> bool:
    """``X ≤_Lex(L) Y`` by the symmetric-difference rule."""
    field = lo.field
    if not (hf.is_subset(x, field) and hf.is_subset(y, field)):
        raise NotInFieldError("arguments must be subsets of the field")
    if x is y:
        return True
    diff = hf.union(hf.difference(x, y), hf.difference(y, x))
    top = max(diff.children, key=lo.position)
    return top in y


def lex_element(lo: LinearOrdering, i: int) -> HFSet:
    """The i-th element of ``Lex(L)``."""
    if not 0 <= i < (1 << len(lo)):
        raise HFError("index outside Lex(L)")
    ts = lo.terms
    bits = bin(i)[:1:-1]
    return hf.make(ts[p] for p, b in enumerate(bits) if b == "1")


def lex_index(lo: LinearOrdering, x: HFSet) -> int:
    return sum(1 << lo.position(t) for t in x.children)


def lex_step(lo: LinearOrdering) -> LinearOrdering:
    """``Lex(L)``: all subsets of the field in lexicographic order."""
    cap = get_limits().lex_field_max
    if len(lo) > cap:
        raise TooLargeError(f"Lex of a {len(lo)}-term ordering exceeds limit {cap}")
    if (1 << len(lo)) > get_limits().power_set_max:
        raise TooLargeError("Lex(L) exceeds the power set limit")
    return from_terms(lex_element(lo, i) for i in range(1 << len(lo)))


# LEX


def lex_size(j: int) -> int:
    """Number of terms of the j-th LEX term: 0, 1, 2, 4, 16, 65536, ..."""
    size = 0
    for _ in range(j):
        if size > get_limits().tower_bits_max:
            raise TooLargeError("LEX term size exceeds the tower budget")
        size = 1 << size
    return size


def lex_anchor(k: int) -> int:
    """The j with ``lex_size(j) <= k < 2**lex_size(j)``."""
    j, size = 0, 0
    while not k < (1 << size):
        j, size = j + 1, 1 << size
    return j


_lex_terms: list[LinearOrdering] = [EMPTY_ORDER]
_lex_lock = threading.Lock()


def lex_term(j: int) -> LinearOrdering:
    """The j-th LEX term, built by repeated Lex steps."""
    with _lex_lock:
        while len(_lex_terms) <= j:
            _lex_terms.append(lex_step(_lex_terms[-1]))
        return _lex_terms[j]


def _lex_recover(t: LinearOrdering) -> list[LinearOrdering]:
    out = [EMPTY_ORDER]
    while len(out[-1]) < len(t):
        out.append(lex_step(out[-1]))
    return out


LEX = IterationSystem(
    "lex", EMPTY_ORDER, lex_step, _lex_recover, to_hf=lambda lo: lo.carrier,
)


# ACK


@dataclass(frozen=True)
class DontCare:
    """Result of the ACK successor outside its precondition."""

    reason: str
    value: HFSet = EMPTY


_elems: list[HFSet] = [EMPTY]
_elems_lock = threading.Lock()


def ack_element(k: int) -> HFSet:
    """``s_k``: the k-th element of the anchoring Lex enumeration."""
    with _elems_lock:
        while len(_elems) <= k:
            n = len(_elems)
            bits = bin(n)[:1:-1]
            _elems.append(hf.make(_elems[p] for p, b in enumerate(bits) if b == "1"))
        return _elems[k]


@functools.lru_cache(maxsize=256)
def ack_term(k: int) -> LinearOrdering:
    """``l_k = [s_0, ..., s_{k-1}]``."""
    if k > get_limits().enum_max:
        raise TooLargeError(f"ACK term l_{k} is too long to materialize")
    return from_terms(ack_element(i) for i in range(k))


def ack_successor(lo: LinearOrdering) -> LinearOrdering | DontCare:
    """One step along ``Lex(L)`` for the LEX term ``L`` anchoring ``lo``.

    The anchor is the LEX term ``L`` with ``L ⊆* lo ⊊* Lex(L)``; by size it is the
    j-th one with ``lex_size(j) <= |lo| < 2**lex_size(j)``.
    """
    k = len(lo)
    j = lex_anchor(k)
    anchor = lex_term(j)
    if not is_initial_segment(anchor, lo):
        return DontCare(f"no LEX term is an initial segment of length {len(anchor)}")
    for i, t in enumerate(lo.terms):
        if lex_element(anchor, i) is not t:
            return DontCare("ordering is not an initial segment of Lex(L)")
    return lo.append(lex_element(anchor, k))


def _ack_recover(t: LinearOrdering) -> list[LinearOrdering]:
    return [p for p in t.proper_prefixes()] + [t]


ACK = IterationSystem(
    "ack", EMPTY_ORDER, ack_successor, _ack_recover, to_hf=lambda lo: lo.carrier,
)


# ACK₀


def longest_ack_prefix(s: HFSet) -> int:
    """Length of the longest ACK term whose field lies inside ``s``."""
    m = 0
    while ack_element(m) in s:
        m += 1
    return m


def ack0_successor(s: HFSet) -> HFSet:
    """Drop ``s_0..s_{m-1}`` and add ``s_m``, where ``l_m`` is the longest ACK
    term with field inside ``s`` and ``s_m`` is the last term of its successor.
    """
    m = longest_ack_prefix(s)
    nxt = ack_successor(ack_term(m))
    if isinstance(nxt, DontCare):  # cannot happen for genuine ACK terms
        raise HFError(nxt.reason)
    new = nxt.last()
    dropped = ack_term(m).field
    return hf.adjoin(hf.difference(s, dropped), new)


ACK0 = IterationSystem("ack0", EMPTY, ack0_successor, None)
