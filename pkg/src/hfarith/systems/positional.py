"""Positional systems: fixed base ``N[S]`` and fixed length ``N⟨L⟩``.

In ``N[S]`` lengths grow along the numbers of ``N`` while the base stays put.
In ``N⟨L⟩`` the length stays put and the base grows: its bases are the sets of
proper initial segments ``InSeg(N)`` of longer and longer numbers of ``N``.
"""

from __future__ import annotations

import threading
from typing import Sequence

from ..errors import HFError
from ..linord import LinearOrdering, from_terms
from ..numerals import (
    NumerationBase,
    Numeral,
    coded_value,
    numeral_fixed_length,
    numeral_from_value,
    render,
)
from .core import IterationSystem


def fixed_base(n_sys: IterationSystem, base: NumerationBase) -> IterationSystem:
    """``N[S]``: start at ``⟨0⟩`` of length ``[0_N]``; the successor of a numeral
    with length ``[0..k]`` is the next numeral of ``Num_S([0..k, σ(k)])``.

    The initial term is not proper, so it is not itself a member of that
    enumeration; it codes zero and its successor is the numeral coding one.
    """
    zero = n_sys.initial
    initial = Numeral(base, (zero,), (0,))

    def succ(num: Numeral) -> Numeral:
        ext = num.length + (n_sys.successor(num.length[-1]),)
        return numeral_from_value(base, coded_value(num) + 1, ext)

    def recover(num: Numeral) -> list[Numeral]:
        v = coded_value(num)
        if not num.length:
            raise HFError("the empty numeral is not a term")
        return [initial] + [numeral_from_value(base, w, num.length) for w in range(1, v + 1)]

    return IterationSystem(
        f"base:{n_sys.name}:{base.size}",
        initial,
        succ,
        recover,
        to_hf=lambda num: num.as_hfset(n_sys.to_hf),
        render_term=render,
    )


class _InSegBases:
    """Bases ``InSeg([0_N, ..., (m-1)_N])`` keyed by ``m``."""

    def __init__(self, n_sys: IterationSystem):
        self.n_sys = n_sys
        self._cache: dict[int, NumerationBase] = {}
        self._lock = threading.Lock()

    def __call__(self, m: int) -> NumerationBase:
        with self._lock:
            b = self._cache.get(m)
            if b is None:
                terms = self.n_sys.terms(m)
                order = from_terms(self.n_sys.to_hf(t) for t in terms)
                b = NumerationBase(order.inseg())
                self._cache[m] = b
            return b


def fixed_length(n_sys: IterationSystem, length: LinearOrdering | Sequence) -> IterationSystem:
    """``N⟨L⟩``: numerals of length ``L`` over bases ``InSeg(N)``.

    Within a base the successor adds one with carry.  When the base is
    exhausted, at the numeral with every digit maximal, the base moves to the
    next ``InSeg`` and the new numeral codes ``|S|**|L|``.
    """
    ell = tuple(length.terms if isinstance(length, LinearOrdering) else length)
    if len(ell) < 2:
        raise HFError("fixed length needs at least two length terms")
    width = len(ell)
    bases = _InSegBases(n_sys)
    initial = Numeral(bases(2), ell, (0,) * width)

    def succ(num: Numeral) -> Numeral:
        m = num.base.size
        v = coded_value(num)
        if v + 1 < m ** width:
            return numeral_fixed_length(num.base, v + 1, ell)
        return numeral_fixed_length(bases(m + 1), m ** width, ell)

    def base_for(v: int) -> NumerationBase:
        m = 2
        while v >= m ** width:
            m += 1
        return bases(m)

    def recover(num: Numeral) -> list[Numeral]:
        v = coded_value(num)
        return [numeral_fixed_length(base_for(w), w, ell) for w in range(v + 1)]

    return IterationSystem(
        f"len:{n_sys.name}:{width}",
        initial,
        succ,
        recover,
        to_hf=lambda num: num.as_hfset(),
        render_term=render,
        meta={"bases": bases},
    )
