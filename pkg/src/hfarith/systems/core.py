"""Iteration systems and their numbers.

A system is an initial term plus a successor function.  Terms are whatever
objects the system works with: sets for the classical systems, orderings for
LEX and ACK, numerals for the positional systems, plain indices for ACK_φ.
``to_hf`` maps a term to its set-theoretic form when one is needed.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Sequence

from .. import hf
from ..config import get_limits
from ..errors import HFError, TooLargeError, UnsupportedError
from ..hf import EMPTY, HFSet
from ..linord import LinearOrdering, from_terms


def _identity(t):
    return t


@dataclass(frozen=True, eq=False)
class IterationSystem:
    name: str
    initial: Any
    successor: Callable[[Any], Any]
    recover: Callable[[Any], Sequence] | None = None
    to_hf: Callable[[Any], HFSet] = _identity
    render_term: Callable[[Any], str] | None = None
    meta: dict = field(default_factory=dict, repr=False)
    _cache: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def terms(self, k: int) -> list:
        """The first ``k`` terms, memoized."""
        if k > get_limits().enum_max:
            raise TooLargeError(f"{k} terms exceed the enumeration limit")
        with self._lock:
            cache = self._cache
            if not cache and k > 0:
                cache.append(self.initial)
            while len(cache) < k:
                cache.append(self.successor(cache[-1]))
            return cache[:k]

    def iterate(self) -> Iterator:
        t = self.initial
        while True:
            yield t
            t = self.successor(t)

    def __repr__(self) -> str:
        return f"IterationSystem({self.name})"


@dataclass(frozen=True)
class SystemNumber:
    system: IterationSystem = field(compare=False)
    terms: tuple

    def __len__(self) -> int:
        return len(self.terms)

    def last(self):
        if not self.terms:
            raise HFError("the empty number has no last term")
        return self.terms[-1]

    @property
    def ordering(self) -> LinearOrdering:
        return from_terms(self.system.to_hf(t) for t in self.terms)


def _terms_of(sys: IterationSystem, seq) -> tuple[tuple, bool]:
    """Terms of a candidate number and whether they are in set form."""
    if isinstance(seq, SystemNumber):
        return seq.terms, False
    if isinstance(seq, LinearOrdering):
        return seq.terms, True
    return tuple(seq), False


def gen_check(sys: IterationSystem, seq) -> bool:
    """Empty, or first term is the initial term and each next term is the successor."""
    terms, as_sets = _terms_of(sys, seq)
    if not terms:
        return True
    conv = sys.to_hf if as_sets else _identity
    # the memoized run from the initial term is exactly the pointwise check
    generated = sys.terms(len(terms))
    return all(conv(g) == t for g, t in zip(generated, terms))


def nth_term(sys: IterationSystem, k: int):
    return sys.terms(k + 1)[k]


def nth_number(sys: IterationSystem, k: int) -> SystemNumber:
    """The number with ``k`` terms."""
    return SystemNumber(sys, tuple(sys.terms(k)))


def recover_number(sys: IterationSystem, t) -> SystemNumber:
    if sys.recover is None:
        raise UnsupportedError(f"{sys.name} has no recovery rule")
    terms = tuple(sys.recover(t))
    if not terms or terms[-1] != t or not gen_check(sys, terms):
        raise HFError(f"not a term of {sys.name}")
    return SystemNumber(sys, terms)


def natural_upto(sys: IterationSystem, depth: int) -> bool:
    """No generated number of length ``<= depth`` contains the successor of its last term."""
    seen = set()
    for t in sys.terms(depth + 1):
        if t in seen:
            return False
        seen.add(t)
    return True


# classical systems


def _vn_recover(t: HFSet) -> list[HFSet]:
    return sorted(list(t.children) + [t], key=lambda x: x.size)


def _z_recover(t: HFSet) -> list[HFSet]:
    return sorted(hf.transitive_closure(hf.singleton(t)).children, key=lambda x: x.rank)


def _ch_recover(t: HFSet) -> list[HFSet]:
    out = [EMPTY]
    while out[-1].rank < t.rank:
        out.append(hf.power_set(out[-1]))
    return out


VN = IterationSystem("vn", EMPTY, lambda x: hf.adjoin(x, x), _vn_recover)
Z = IterationSystem("z", EMPTY, hf.singleton, _z_recover)
CH = IterationSystem("ch", EMPTY, hf.power_set, _ch_recover)
