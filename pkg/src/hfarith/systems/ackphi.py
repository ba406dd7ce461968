"""ACK_φ: an ACK subsequence closed under a regular size map φ.

Terms are ACK terms addressed by index (``l_k`` is the index ``k``).  Stage 0
takes ``l_0 .. l_{2_N - 1}``; stage ``n >= 1`` takes ``k_n = h_n - h_{n-1}``
consecutive terms starting at ``l_{2_{N+n-1}}``, where ``h_n = φ^n(2_N)``.
Stage starts are single-bit indices, so skipping the gap between stages is a
bignum shift rather than an enumeration.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..cardarith import tower2
from ..errors import HFError, TooLargeError
from ..config import get_limits
from .core import IterationSystem
from .lexack import ack_term

PHIS: dict[str, Callable[[int], int]] = {
    "double": lambda x: 2 * x,
    "square": lambda x: x * x,
    "succ": lambda x: x + 1,
}


def regularity_violation(phi: Callable[[int], int], k: int, probe_bound: int) -> tuple | None:
    """First ``(clause, x, y)`` failing on ``K <= x <= y <= probe_bound``, else None."""
    vals = {x: phi(x) for x in range(k, probe_bound + 1)}
    for x in range(k, probe_bound + 1):
        if not x < vals[x]:
            return ("i", x, x)
        for y in range(x, probe_bound + 1):
            if vals[x] - x > 2 ** y - y:
                return ("ii", x, y)
            if vals[x] > vals[y]:
                return ("iii", x, y)
    return None


def is_regular(phi: Callable[[int], int], k: int, probe_bound: int = 64) -> bool:
    return regularity_violation(phi, k, probe_bound) is None


def lt_pow2_minus(k: int, t: int) -> bool:
    """``k < 2**t - t`` without materializing ``2**t`` when ``t`` is huge."""
    if t < (1 << 20):
        return k < (1 << t) - t
    # 2**t - t > 2**(t-1) for t >= 2
    return k.bit_length() <= t - 1


def lt_tower_gap(k: int, m: int) -> bool:
    """``k < 2**(2_m) - 2_m``.  For ``m >= 5`` the right side exceeds any
    integer that fits in memory, so only small ``m`` is computed.
    """
    if m <= 4:
        return lt_pow2_minus(k, tower2(m))
    return True


@dataclass(frozen=True)
class Stage:
    n: int
    start_level: int | None   # the stage starts at l_{2_start_level}; None for stage 0
    count: int                # terms contributed (k_n, or 2_N for stage 0)
    h: int                    # terms generated by the end of the stage

    @property
    def start_index(self) -> int:
        """Index of the first ACK term of the stage (a single-bit bignum)."""
        return 0 if self.start_level is None else tower2(self.start_level)


@dataclass
class StagePlan:
    phi: Callable[[int], int]
    K: int
    N: int
    _stages: list[Stage] = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def stage(self, n: int) -> Stage:
        with self._lock:
            while len(self._stages) <= n:
                m = len(self._stages)
                if m == 0:
                    h0 = tower2(self.N)
                    self._stages.append(Stage(0, None, h0, h0))
                else:
                    prev = self._stages[-1]
                    h = self.phi(prev.h)
                    self._stages.append(Stage(m, self.N + m - 1, h - prev.h, h))
            return self._stages[n]

    def h(self, n: int) -> int:
        return self.stage(n).h

    def clause_ok(self, n: int) -> bool:
        """The stage ``n+1`` terms fit before the following stage start."""
        k_next = self.stage(n + 1).count
        return lt_tower_gap(k_next, self.N + n)

    def stage_of_position(self, p: int) -> Stage:
        n = 0
        while self.stage(n).h <= p:
            n += 1
        return self.stage(n)

    def position_to_index(self, p: int) -> int:
        st = self.stage_of_position(p)
        if st.n == 0:
            return p
        return st.start_index + (p - self.stage(st.n - 1).h)

    def index_to_position(self, i: int) -> int:
        n = 0
        while True:
            st = self.stage(n)
            if st.start_index <= i < st.start_index + st.count:
                base = 0 if n == 0 else self.stage(n - 1).h
                return base + (i - st.start_index)
            if i < st.start_index:
                raise HFError(f"l_{i} is not a term of this system")
            n += 1

    def stage_indices(self, n: int) -> Iterator[int]:
        """``STAGE(V_{N+n})``: indices of stages 0..n in order."""
        for m in range(n + 1):
            st = self.stage(m)
            yield from range(st.start_index, st.start_index + st.count)


def compute_n(phi: Callable[[int], int], k: int) -> int:
    """Least N with ``φ(x) < 2_N`` for every ``x <= K``."""
    top = max(phi(x) for x in range(k + 1))
    n = 0
    while not top < tower2(n):
        n += 1
    return n


@dataclass(frozen=True)
class PrefixNumber:
    """The number of ACK_φ with ``size`` terms, kept lazy."""

    plan: StagePlan = field(compare=False)
    size: int

    def __len__(self) -> int:
        return self.size

    @property
    def terms(self) -> tuple[int, ...]:
        if self.size > get_limits().enum_max:
            raise TooLargeError("number too long to list")
        return tuple(self.plan.position_to_index(p) for p in range(self.size))

    def last(self) -> int:
        if self.size == 0:
            raise HFError("the empty number has no last term")
        return self.plan.position_to_index(self.size - 1)


def ack_phi(phi: Callable[[int], int] | str, k: int, probe_bound: int = 64) -> tuple[IterationSystem, StagePlan]:
    name = phi if isinstance(phi, str) else getattr(phi, "__name__", "phi")
    fn = PHIS[phi] if isinstance(phi, str) else phi
    bad = regularity_violation(fn, k, probe_bound)
    if bad is not None:
        raise HFError(f"phi is not regular above {k}: clause ({bad[0]}) fails at x={bad[1]}, y={bad[2]}")
    plan = StagePlan(fn, k, compute_n(fn, k))

    def succ(i: int) -> int:
        return plan.position_to_index(plan.index_to_position(i) + 1)

    def recover(i: int) -> list[int]:
        return list(PrefixNumber(plan, plan.index_to_position(i) + 1).terms)

    sys = IterationSystem(
        f"ackphi:{name}:{k}",
        0,
        succ,
        recover,
        to_hf=lambda i: ack_term(i).carrier,
        render_term=lambda i: f"l_{i}",
        meta={"plan": plan},
    )
    return sys, plan


def defined_successor(plan: StagePlan, i: int) -> int:
    """Successor read straight off the definition: Next of ``l_i`` inside
    ``STAGE(V_{N+n+2})`` for the least ``n`` whose LEX term ``L_{N+n+1}``
    properly extends ``l_i``.  Builds the stage list, so only for small plans.
    """
    n = 0
    while not i < tower2(plan.N + n):
        n += 1
    order = list(plan.stage_indices(n + 2))
    pos = order.index(i)
    return order[min(pos + 1, len(order) - 1)]


def closure_witness_gamma(plan: StagePlan, number) -> PrefixNumber:
    """``number`` may be a number or just its size.

    γ(L): ``STAGE(V_N)`` when ``|L| <= K``, else ``STAGE(V_{N+k+1})`` for the
    least ``k`` with ``L ⊆* STAGE(V_{N+k})``.
    """
    if isinstance(number, int):
        m = number
    elif isinstance(number, PrefixNumber):
        m = number.size
    else:
        m = len(number)
    if m <= plan.K:
        return PrefixNumber(plan, plan.h(0))
    k = 0
    while plan.h(k) < m:
        k += 1
    return PrefixNumber(plan, plan.h(k + 1))
