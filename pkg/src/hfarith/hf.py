"""Hereditarily finite pure sets.

Every set is interned: two extensionally equal sets are the same Python object,
so equality is identity.  Members are kept sorted by Ackermann code
(``code(S) = sum(2**code(x) for x in S)``).  Codes are computed eagerly while they
stay small and lazily otherwise, because sets such as ``{decode(2**65536)}`` have
codes far too large to hold.  Ordering between sets never needs the full code:
the set holding the greatest element of the symmetric difference is larger.
"""

from __future__ import annotations

import functools
import itertools
import json
import threading
import weakref
from typing import Callable, Iterable, Iterator

from .config import get_limits
from .errors import EmptySetError, ParseError, TooLargeError

# Parents of children below this bound get an eager integer code.
_EAGER_CHILD = 1 << 16


class HFSet:
    """An interned hereditarily finite set.  Build with :func:`make` or :func:`decode`."""

    __slots__ = ("children", "size", "rank", "_small", "_code", "_members", "__weakref__")

    children: tuple["HFSet", ...]
    size: int
    rank: int

    def __new__(cls, *args, **kwargs):
        raise TypeError("HFSet is interned; use hf.make or hf.decode")

    # ordering

    def __lt__(self, other: "HFSet") -> bool:
        return ack_cmp(self, other) < 0

    def __le__(self, other: "HFSet") -> bool:
        return ack_cmp(self, other) <= 0

    def __gt__(self, other: "HFSet") -> bool:
        return ack_cmp(self, other) > 0

    def __ge__(self, other: "HFSet") -> bool:
        return ack_cmp(self, other) >= 0

    # container protocol

    def __iter__(self) -> Iterator["HFSet"]:
        return iter(self.children)

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.size > 0

    def __contains__(self, x: "HFSet") -> bool:
        if self._small is not None and x._small is not None:
            return (self._small >> x._small) & 1 == 1
        if self._members is None:
            self._members = frozenset(self.children)
        return x in self._members

    def __reduce__(self):
        return (decode, (self.code,))

    @property
    def code(self) -> int:
        """Ackermann code; raises TooLargeError when it would not fit the limit."""
        if self._small is not None:
            return self._small
        if self._code is None:
            cap = get_limits().code_bits_max
            total = 0
            for c in self.children:
                cc = c.code
                if cc > cap:
                    raise TooLargeError(f"code needs more than {cap} bits")
                total |= 1 << cc
            self._code = total
        return self._code

    def code_is_small(self) -> bool:
        return self._small is not None

    def __repr__(self) -> str:
        if self._small is not None and self._small < (1 << 64):
            return f"HFSet(#{self._small})"
        return f"HFSet(size={self.size}, rank={self.rank})"

    def __str__(self) -> str:
        return render(self)


_table: "weakref.WeakValueDictionary[tuple, HFSet]" = weakref.WeakValueDictionary()
_by_code: "weakref.WeakValueDictionary[int, HFSet]" = weakref.WeakValueDictionary()
# sets with codes below this stay alive for the whole process
_STRONG = 1 << 16
_strong: dict[int, HFSet] = {}
_lock = threading.RLock()


def _lookup_code(n: int) -> "HFSet | None":
    return _strong.get(n) if n < _STRONG else _by_code.get(n)


def _intern(children: tuple[HFSet, ...], small: int | None = None) -> HFSet:
    """Return the unique set with these members; ``children`` must be sorted.

    ``small`` may carry the code when the caller already knows it.
    """
    last = children[-1] if children else None
    if small is None:
        if last is None:
            small = 0
        elif last._small is not None and last._small < _EAGER_CHILD:
            small = 0
            for c in children:
                small |= 1 << c._small
    with _lock:
        s = _lookup_code(small) if small is not None else _table.get(children)
        if s is not None:
            return s
        s = object.__new__(HFSet)
        s.children = children
        s.size = len(children)
        s.rank = last.rank + 1 if last is not None else 0
        s._code = None
        s._members = None
        s._small = small
        if small is None:
            _table[children] = s
        elif small < _STRONG:
            _strong[small] = s
        else:
            _by_code[small] = s
        return s


def ack_cmp(a: HFSet, b: HFSet) -> int:
    """Three-way comparison by Ackermann code, without computing large codes."""
    while True:
        if a is b:
            return 0
        ca, cb = a._small, b._small
        if ca is not None and cb is not None:
            return (ca > cb) - (ca < cb)
        # an eager code is always below every lazy one
        if ca is not None:
            return -1
        if cb is not None:
            return 1
        xa, xb = a.children, b.children
        i, j = len(xa) - 1, len(xb) - 1
        while i >= 0 and j >= 0 and xa[i] is xb[j]:
            i -= 1
            j -= 1
        if i < 0 or j < 0:
            return (i >= 0) - (j >= 0)
        a, b = xa[i], xb[j]


_key = functools.cmp_to_key(ack_cmp)


def _sorted(members: Iterable[HFSet]) -> tuple[HFSet, ...]:
    uniq = list({id(m): m for m in members}.values())
    if all(m._small is not None for m in uniq):
        uniq.sort(key=lambda m: m._small)
    else:
        uniq.sort(key=_key)
    return tuple(uniq)


EMPTY = _intern(())


def make(members: Iterable[HFSet] = ()) -> HFSet:
    """The set with exactly the given members (duplicates collapse)."""
    return _intern(_sorted(members))


def decode(n: int) -> HFSet:
    """The set with Ackermann code ``n``."""
    s = _lookup_code(n)
    if s is not None:
        return s
    if n < 0:
        raise ValueError("codes are natural numbers")
    kids = tuple(decode(i) for i in _bit_positions(n))
    return _intern(kids, n if kids[-1]._small < _EAGER_CHILD else None)


def _bit_positions(n: int) -> list[int]:
    """Positions of the set bits of ``n``, ascending."""
    if n.bit_count() * 32 < n.bit_length():
        out = []
        while n:
            low = n & -n
            out.append(low.bit_length() - 1)
            n ^= low
        return out
    return [i for i, b in enumerate(bin(n)[:1:-1]) if b == "1"]


def encode(s: HFSet) -> int:
    return s.code


# basic constructors


def singleton(x: HFSet) -> HFSet:
    return _intern((x,))


def pair_set(a: HFSet, b: HFSet) -> HFSet:
    return make((a, b))


def kpair(a: HFSet, b: HFSet) -> HFSet:
    """Ordered pair ``{{a}, {a, b}}``."""
    return pair_set(singleton(a), pair_set(a, b))


def adjoin(s: HFSet, x: HFSet) -> HFSet:
    """``s ∪ {x}``."""
    if x in s:
        return s
    kids = list(s.children)
    pos = _bisect(kids, x)
    kids.insert(pos, x)
    return _intern(tuple(kids))


def _bisect(kids: list[HFSet], x: HFSet) -> int:
    lo, hi = 0, len(kids)
    while lo < hi:
        mid = (lo + hi) // 2
        if ack_cmp(kids[mid], x) < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


_WORD = 1 << 64


def _both_small(a: HFSet, b: HFSet) -> bool:
    """Code arithmetic pays off while codes stay word-sized."""
    return a._small is not None and b._small is not None and a._small < _WORD and b._small < _WORD


def union(a: HFSet, b: HFSet) -> HFSet:
    if _both_small(a, b):
        return decode(a._small | b._small)
    return make(itertools.chain(a.children, b.children))


def intersection(a: HFSet, b: HFSet) -> HFSet:
    if _both_small(a, b):
        return decode(a._small & b._small)
    return _intern(tuple(x for x in a.children if x in b))


def difference(a: HFSet, b: HFSet) -> HFSet:
    if _both_small(a, b):
        return decode(a._small & ~b._small)
    return _intern(tuple(x for x in a.children if x not in b))


def is_subset(a: HFSet, b: HFSet) -> bool:
    if a._small is not None and b._small is not None:
        return a._small & ~b._small == 0
    if a.size > b.size:
        return False
    return all(x in b for x in a.children)


def is_transitive(s: HFSet) -> bool:
    return all(is_subset(x, s) for x in s.children)


def union_all(s: HFSet) -> HFSet:
    """``⋃S``."""
    if s._small is not None and all(x._small is not None for x in s.children):
        acc = 0
        for x in s.children:
            acc |= x._small
        return decode(acc)
    return make(itertools.chain.from_iterable(x.children for x in s.children))


def power_set(s: HFSet) -> HFSet:
    """``P(S)``, bounded by ``power_set_max`` members."""
    cap = get_limits().power_set_max
    if s.size >= 63 or (1 << s.size) > cap:
        raise TooLargeError(f"P(S) would have 2**{s.size} members (limit {cap})")
    # Adding members in ascending order yields subsets in ascending code order:
    # subset index bits correspond to member positions.
    subsets = [EMPTY]
    for c in s.children:
        subsets.extend([_intern(x.children + (c,)) for x in subsets])
    return _intern(tuple(subsets))


def comprehension(s: HFSet, pred: Callable[[HFSet], bool]) -> HFSet:
    """``{x ∈ S : pred(x)}``; ``pred`` may be any callable, including term closures."""
    return _intern(tuple(x for x in s.children if pred(x)))


def replacement(s: HFSet, f: Callable[[HFSet], HFSet]) -> HFSet:
    """``{f(x) : x ∈ S}``."""
    return make(f(x) for x in s.children)


def choose(s: HFSet) -> HFSet:
    """The member of least code."""
    if not s.children:
        raise EmptySetError("choose on the empty set")
    return s.children[0]


def transitive_closure(s: HFSet) -> HFSet:
    """The least transitive superset of the members of ``s``."""
    seen: dict[int, HFSet] = {}
    stack = list(s.children)
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen[id(x)] = x
        stack.extend(x.children)
    return make(seen.values())


def epsilon_chains(s: HFSet) -> Iterator[tuple[HFSet, ...]]:
    """All chains ``(x0, ..., xk)`` with ``x0 ∈ S`` and ``x(i+1) ∈ xi``."""
    stack: list[tuple[HFSet, ...]] = [(x,) for x in reversed(s.children)]
    while stack:
        chain = stack.pop()
        yield chain
        stack.extend(chain + (y,) for y in reversed(chain[-1].children))


def chain_carrier(chain: Iterable[HFSet]) -> HFSet:
    """Kuratowski carrier ``{{t1}, {t1,t2}, ...}`` of a sequence of distinct sets."""
    prefixes = []
    cur = EMPTY
    for t in chain:
        cur = adjoin(cur, t)
        prefixes.append(cur)
    return make(prefixes)


def epsilon_fan(s: HFSet) -> HFSet:
    """``ε(S)``: the carriers of all membership chains starting in ``S``."""
    cap = get_limits().fan_tc_max
    tc = transitive_closure(s)
    if tc.size > cap:
        raise TooLargeError(f"|TC(S)| = {tc.size} exceeds fan limit {cap}")
    return make(chain_carrier(c) for c in epsilon_chains(s))


def iterated_power(t: HFSet, n: int) -> HFSet:
    for _ in range(n):
        t = power_set(t)
    return t


def member_of_iterated_power(a: HFSet, n: int, t: HFSet) -> bool:
    """Decide ``a ∈ P^n(T)`` for transitive ``T`` without building the power set."""
    return _mip(a, n, t)


@functools.lru_cache(maxsize=1 << 18)
def _mip(a: HFSet, n: int, t: HFSet) -> bool:
    if a in t:
        return True
    if n == 0:
        return False
    return all(_mip(x, n - 1, t) for x in a.children)


# von Neumann and Zermelo numerals are used all over the place


@functools.lru_cache(maxsize=None)
def vn(k: int) -> HFSet:
    """The von Neumann natural with ``k`` members."""
    cur = EMPTY
    for _ in range(k):
        cur = adjoin(cur, cur)
    return cur


def zermelo(k: int) -> HFSet:
    cur = EMPTY
    for _ in range(k):
        cur = singleton(cur)
    return cur


# text forms


def render(s: HFSet) -> str:
    """Brace notation: ``{}`` for the empty set, members in code order."""
    memo: dict[int, str] = {}
    stack: list[tuple[HFSet, bool]] = [(s, False)]
    while stack:
        x, done = stack.pop()
        if id(x) in memo:
            continue
        if done:
            memo[id(x)] = "{" + ",".join(memo[id(c)] for c in x.children) + "}"
        else:
            stack.append((x, True))
            stack.extend((c, False) for c in x.children if id(c) not in memo)
    return memo[id(s)]


def render_code(s: HFSet) -> str:
    return f"#{s.code}"


def parse_hf(text: str) -> HFSet:
    """Parse brace notation or ``#n``; ``#n`` may also appear as a member."""
    pos = 0
    n = len(text)

    def skip() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def item() -> HFSet:
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("unexpected end of input", pos + 1)
        ch = text[pos]
        if ch == "#":
            start = pos + 1
            pos += 1
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ParseError("expected digits after '#'", pos + 1)
            return decode(int(text[start:pos]))
        if ch == "{":
            pos += 1
            members = []
            skip()
            if pos < n and text[pos] == "}":
                pos += 1
                return EMPTY
            while True:
                members.append(item())
                skip()
                if pos < n and text[pos] == ",":
                    pos += 1
                    continue
                if pos < n and text[pos] == "}":
                    pos += 1
                    return make(members)
                raise ParseError("expected ',' or '}'", pos + 1)
        raise ParseError(f"unexpected {ch!r}", pos + 1)

    out = item()
    skip()
    if pos != n:
        raise ParseError("trailing input", pos + 1)
    return out


def to_json(s: HFSet) -> dict:
    return {"code": str(s.code), "children": [to_json(c) for c in s.children]}


def from_json(obj: dict | str) -> HFSet:
    if isinstance(obj, str):
        obj = json.loads(obj)
    s = make(from_json(c) for c in obj.get("children", []))
    if "code" in obj and s.code != int(obj["code"]):
        raise ValueError("code does not match children")
    return s
