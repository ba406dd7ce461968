"""Kuratowski linear orderings.

A sequence ``t1, ..., tn`` of distinct sets is represented by its carrier
``{{t1}, {t1,t2}, ..., {t1,...,tn}}``.  The carrier is the canonical object;
:class:`LinearOrdering` caches the decoded term sequence next to it.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Sequence

from . import hf
from .errors import InvalidOrderingError, NotInFieldError
from .hf import EMPTY, HFSet


def validate(s: HFSet) -> bool:
    """The four carrier clauses, checked as stated."""
    kids = s.children
    # (i) the empty set is not a member
    if EMPTY in s:
        return False
    # (ii) some singleton when nonempty
    if kids and not any(x.size == 1 for x in kids):
        return False
    # (iv) members pairwise comparable under inclusion
    by_size = sorted(kids, key=lambda x: x.size)
    for a, b in zip(by_size, by_size[1:]):
        if a.size == b.size or not hf.is_subset(a, b):
            return False
    # (iii) each member is the field or extends by one field element
    field = hf.union_all(s)
    sizes = {x.size: x for x in kids}
    for x in kids:
        if x is field:
            continue
        nxt = sizes.get(x.size + 1)
        if nxt is None or not hf.is_subset(x, nxt):
            return False
    return True


class LinearOrdering:
    """A validated Kuratowski carrier with its decoded terms."""

    __slots__ = ("carrier", "terms", "_pos", "_field")

    def __init__(self, carrier: HFSet, terms: tuple[HFSet, ...]):
        self.carrier = carrier
        self.terms = terms
        self._pos: dict[int, int] | None = None
        self._field: HFSet | None = None

    @classmethod
    def from_carrier(cls, s: HFSet, check: bool = True) -> "LinearOrdering":
        if check and not validate(s):
            raise InvalidOrderingError("set is not a Kuratowski linear ordering")
        prefixes = sorted(s.children, key=lambda x: x.size)
        terms = []
        prev = EMPTY
        for p in prefixes:
            (t,) = hf.difference(p, prev).children
            terms.append(t)
            prev = p
        return cls(s, tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearOrdering) and other.carrier is self.carrier

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __repr__(self) -> str:
        return f"LinearOrdering({render(self)})"

    @property
    def field(self) -> HFSet:
        if self._field is None:
            self._field = hf.make(self.terms)
        return self._field

    def position(self, x: HFSet) -> int:
        if self._pos is None:
            self._pos = {id(t): i for i, t in enumerate(self.terms)}
        i = self._pos.get(id(x))
        if i is None or self.terms[i] is not x:
            raise NotInFieldError("element not in the field")
        return i

    def __contains__(self, x: HFSet) -> bool:
        try:
            self.position(x)
        except NotInFieldError:
            return False
        return True

    def first(self) -> HFSet:
        if not self.terms:
            raise NotInFieldError("empty ordering has no first term")
        return self.terms[0]

    def last(self) -> HFSet:
        if not self.terms:
            raise NotInFieldError("empty ordering has no last term")
        return self.terms[-1]

    def next(self, x: HFSet) -> HFSet:
        """Successor in the ordering; the last term maps to itself."""
        i = self.position(x)
        return self.terms[min(i + 1, len(self.terms) - 1)]

    def prev(self, x: HFSet) -> HFSet:
        """Predecessor; the first term maps to itself."""
        i = self.position(x)
        return self.terms[max(i - 1, 0)]

    def prefix(self, k: int) -> "LinearOrdering":
        return from_terms(self.terms[:k])

    def inseg(self) -> HFSet:
        """The set of proper initial segments, as carriers."""
        return hf.make(p.carrier for p in self.proper_prefixes())

    def proper_prefixes(self) -> list["LinearOrdering"]:
        if not self.terms:
            return []
        out = [LinearOrdering(EMPTY, ())]
        cur = EMPTY
        prefixes = sorted(self.carrier.children, key=lambda x: x.size)
        for k in range(1, len(self.terms)):
            cur = hf.adjoin(cur, prefixes[k - 1])
            out.append(LinearOrdering(cur, self.terms[:k]))
        return out

    def append(self, t: HFSet) -> "LinearOrdering":
        if t in self:
            raise InvalidOrderingError("term already in the field")
        # the full prefix has the largest code since it includes every other
        top = hf.adjoin(self.carrier.children[-1], t) if self.terms else hf.singleton(t)
        return LinearOrdering(hf.adjoin(self.carrier, top), self.terms + (t,))


EMPTY_ORDER = LinearOrdering(EMPTY, ())


def from_terms(terms: Iterable[HFSet]) -> LinearOrdering:
    """Build the carrier for a duplicate-free sequence."""
    terms = tuple(terms)
    if len({id(t) for t in terms}) != len(terms):
        raise InvalidOrderingError("duplicate terms")
    prefixes = []
    cur = EMPTY
    for t in terms:
        cur = hf.adjoin(cur, t)
        prefixes.append(cur)
    return LinearOrdering(hf.make(prefixes), terms)


def less_than(lo: LinearOrdering, a: HFSet, b: HFSet) -> bool:
    """``a <_L b`` iff some member of the carrier holds ``a`` and not ``b``."""
    field = lo.field
    if a not in field or b not in field:
        raise NotInFieldError("comparison outside the field")
    return any(a in x and b not in x for x in lo.carrier.children)


def is_initial_segment(l1: LinearOrdering, l2: LinearOrdering) -> bool:
    """``l1`` is a prefix of ``l2``, judged by term sequences."""
    n = len(l1.terms)
    return n <= len(l2.terms) and all(a is b for a, b in zip(l1.terms, l2.terms[:n]))


def is_proper_initial_segment(l1: LinearOrdering, l2: LinearOrdering) -> bool:
    return len(l1) < len(l2) and is_initial_segment(l1, l2)


def concat(orders: Sequence[LinearOrdering]) -> LinearOrdering:
    """Concatenation; the fields must be pairwise disjoint."""
    seen: set[int] = set()
    terms: list[HFSet] = []
    for lo in orders:
        for t in lo.terms:
            if id(t) in seen:
                raise InvalidOrderingError("overlapping fields")
            seen.add(id(t))
            terms.append(t)
    return from_terms(terms)


def recursion_along(lo: LinearOrdering, a: HFSet, g: Callable[[HFSet], HFSet]) -> tuple[HFSet, ...]:
    """Values of the unique ``f`` on ``Field(L)`` with ``f(First) = a`` and
    ``f(Next x) = g(f(x))``, listed in the order of ``lo``.
    """
    if not lo.terms:
        return ()
    out = [a]
    for _ in lo.terms[1:]:
        out.append(g(out[-1]))
    return tuple(out)


def order_equiv(l1: LinearOrdering, l2: LinearOrdering) -> dict[HFSet, HFSet] | None:
    """An order isomorphism as a dict, or None when the lengths differ."""
    if len(l1) != len(l2):
        return None
    return dict(zip(l1.terms, l2.terms))


def induction_holds(lo: LinearOrdering, phi: Callable[[HFSet], bool]) -> tuple[bool, bool]:
    """Return (premises, conclusion) of the induction schema along ``lo``.

    Premises: ``phi(First)`` and ``phi(x) -> phi(Next x)`` for ``x`` before Last.
    Conclusion: ``phi`` holds on the whole field.
    """
    ts = lo.terms
    if not ts:
        return True, True
    premises = phi(ts[0]) and all(not phi(x) or phi(y) for x, y in zip(ts, ts[1:]))
    return premises, all(phi(x) for x in ts)


def render(lo: LinearOrdering) -> str:
    return "[" + ", ".join(hf.render(t) for t in lo.terms) + "]"


def to_json(lo: LinearOrdering) -> str:
    return json.dumps([str(t.code) for t in lo.terms])


def from_json(text: str) -> LinearOrdering:
    return from_terms(hf.decode(int(c)) for c in json.loads(text))


def parse_ordering(text: str) -> LinearOrdering:
    """Parse ``[t1, t2, ...]`` with brace or ``#n`` terms."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise InvalidOrderingError("ordering text must be bracketed")
    inner = body[1:-1].strip()
    if not inner:
        return EMPTY_ORDER
    return from_terms(hf.parse_hf(p) for p in _split_top(inner))


def _split_top(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts
