"""Cardinal arithmetic, both on sets and on plain sizes.

Set-level operations build actual witnesses (disjoint unions, products, sets of
functions).  Size-level twins work on Python ints; a cardinal size is just an
``int`` here.  Operations taking a "size" accept either an ``int`` or an
:class:`HFSet`, whose size is used.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

from . import hf
from .config import get_limits
from .errors import BudgetExceeded, HFError, TooLargeError
from .hf import EMPTY, HFSet
from .linord import LinearOrdering, from_terms


def size_of(a) -> int:
    return a.size if isinstance(a, HFSet) else int(a)


def cardinal_eq(a: HFSet, b: HFSet) -> bool:
    return a.size == b.size


def cardinal_leq(a: HFSet, b: HFSet) -> bool:
    return a.size <= b.size


# exact constructions


def card_exact(s: HFSet) -> HFSet:
    """``Card(S)``: proper initial segments of the size-ordered subset classes."""
    cap = get_limits().card_exact_max
    if s.size > cap:
        raise TooLargeError(f"card_exact limited to |S| <= {cap}")
    classes: dict[int, list[HFSet]] = {}
    for x in hf.power_set(s).children:
        if x is not s:
            classes.setdefault(x.size, []).append(x)
    order = from_terms(hf.make(classes[k]) for k in sorted(classes))
    return order.inseg()


def ord_exact(s: HFSet) -> LinearOrdering:
    """``Card(S)`` ordered by size."""
    return from_terms(sorted(card_exact(s).children, key=lambda x: x.size))


def rank_fast(s: HFSet) -> int:
    return s.rank


def rank_exact(s: HFSet) -> LinearOrdering:
    """Chains of the epsilon fan grouped by length, ordered by length."""
    fan = hf.epsilon_fan(s)
    groups: dict[int, list[HFSet]] = {}
    for chain in fan.children:
        groups.setdefault(chain.size, []).append(chain)
    return from_terms(hf.make(groups[k]) for k in sorted(groups))


# set level


def succ_c(a: HFSet) -> HFSet:
    return hf.adjoin(a, a)


def product(a: HFSet, b: HFSet) -> HFSet:
    return hf.make(hf.kpair(x, y) for x in a.children for y in b.children)


_ZERO = EMPTY
_ONE = hf.singleton(EMPTY)


def add_c(a: HFSet, b: HFSet) -> HFSet:
    """Disjoint union ``a×{0} ∪ b×{1}``."""
    return hf.union(product(a, hf.singleton(_ZERO)), product(b, hf.singleton(_ONE)))


def mul_c(a: HFSet, b: HFSet) -> HFSet:
    return product(a, b)


def exp_c(a: HFSet, b: HFSet) -> HFSet:
    """All functions from ``b`` to ``a``, as sets of ordered pairs."""
    count = a.size ** b.size
    cap = get_limits().exp_set_max
    if count > cap:
        raise TooLargeError(f"{count} functions exceed limit {cap}")
    dom = b.children
    funcs = (
        hf.make(hf.kpair(x, y) for x, y in zip(dom, values))
        for values in itertools.product(a.children, repeat=len(dom))
    )
    return hf.make(funcs)


# size level


def succ_size(a) -> int:
    return size_of(a) + 1


def add_size(a, b) -> int:
    return size_of(a) + size_of(b)


def mul_size(a, b) -> int:
    return size_of(a) * size_of(b)


def exp_size(a, b) -> int:
    return size_of(a) ** size_of(b)


def monus(a, b) -> int:
    return max(size_of(a) - size_of(b), 0)


def bounded_sum(phi: Callable[[int], int], s) -> int:
    """``Σ_{x < S} φ(x)``."""
    return sum(phi(x) for x in range(size_of(s)))


def bounded_product(phi: Callable[[int], int], s) -> int:
    """``Π_{x < S} φ(x)``."""
    return math.prod(phi(x) for x in range(size_of(s)))


def nth_root(n: int, a) -> int:
    """Least ``x`` with ``a <= x**n``."""
    a = size_of(a)
    if n < 1:
        raise HFError("root index must be at least 1")
    if a <= 1:
        return a
    lo, hi = 1, 1 << (a.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n >= a:
            hi = mid
        else:
            lo = mid + 1
    return lo


def log_base(base, a) -> int:
    """Least ``x`` with ``a <= base**x``."""
    s, a = size_of(base), size_of(a)
    if s < 2:
        raise HFError("log base must have at least two elements")
    x, p = 0, 1
    while p < a:
        p *= s
        x += 1
    return x


def tower(a: int, k: int, budget_bits: int | None = None) -> int:
    """``2^a_k``: ``a`` with ``k`` exponentials stacked on it."""
    cap = get_limits().tower_bits_max if budget_bits is None else budget_bits
    v = a
    for _ in range(k):
        if v > cap:
            raise BudgetExceeded(f"tower value exceeds the budget of {cap} bits")
        v = 1 << v
    return v


def tower2(k: int, budget_bits: int | None = None) -> int:
    """``2_k``."""
    return tower(1, k, budget_bits)


def suplog2(a) -> int:
    """Least ``x`` with ``a <= 2_x``."""
    a = size_of(a)
    x, v = 0, 1
    while v < a:
        v = 1 << v
        x += 1
    return x


def iterexp_witness(a: int, b: int, c: int, bound: int = 1 << 16) -> LinearOrdering | None:
    """Witness for ``2^a_b = c``: an ordering of von Neumann naturals of sizes
    ``a, 2**a, ..., c`` with ``b + 1`` terms; None when the relation fails or a
    tower value would pass ``bound``.
    """
    if a > bound:
        return None
    vals = [a]
    for _ in range(b):
        if vals[-1] >= bound.bit_length():
            return None  # the next value would pass the bound
        vals.append(1 << vals[-1])
    if vals[-1] != c:
        return None
    return from_terms(hf.vn(v) for v in vals)


def check_iterexp_clauses(lo: LinearOrdering, a: int, b: int, c: int) -> bool:
    """The four graph clauses, read off a candidate witness."""
    ts = lo.terms
    if not ts:
        return False
    ok_first = ts[0].size == a
    ok_next = all(y.size == 2 ** x.size for x, y in zip(ts, ts[1:]))
    ok_last = ts[-1].size == c
    ok_len = len(ts) == b + 1
    return ok_first and ok_next and ok_last and ok_len


def arithmetical(op: Callable[[HFSet, HFSet], HFSet], a: HFSet, b: HFSet, a2: HFSet, b2: HFSet) -> bool:
    """``op`` respects equinumerosity on this sample: a~a2, b~b2 gives op(a,b)~op(a2,b2)."""
    if a.size != a2.size or b.size != b2.size:
        return True
    return op(a, b).size == op(a2, b2).size
