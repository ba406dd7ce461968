"""Numerals over finite numeration bases.

A numeral is a base ``S`` together with a digit sequence indexed by a length
ordering.  Digits are stored little-endian (first digit = units) as sizes; the
member of ``S`` with that size is the actual digit.  Length terms are kept as a
plain tuple so that lengths may be numbers of any iteration system, including
ones whose terms are themselves numerals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import hf
from .config import get_limits
from .errors import HFError, InvalidBaseError, TooLargeError
from .hf import EMPTY, HFSet


def is_numeration_base(s: HFSet) -> bool:
    """At least two members, exactly one of each size below ``|S|``."""
    return s.size >= 2 and sorted(x.size for x in s.children) == list(range(s.size))


class NumerationBase:
    __slots__ = ("carrier", "digits")

    def __init__(self, carrier: HFSet):
        if not is_numeration_base(carrier):
            raise InvalidBaseError("not a numeration base")
        self.carrier = carrier
        self.digits = tuple(sorted(carrier.children, key=lambda x: x.size))

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def zero(self) -> HFSet:
        return self.digits[0]

    @property
    def max_digit(self) -> int:
        return self.size - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumerationBase) and other.carrier is self.carrier

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __repr__(self) -> str:
        return f"NumerationBase(size={self.size})"


def vn_base(k: int) -> NumerationBase:
    """The von Neumann natural ``k`` as a base of size ``k``."""
    return NumerationBase(hf.vn(k))


@dataclass(frozen=True)
class Numeral:
    base: NumerationBase
    length: tuple        # terms of the length ordering
    digits: tuple[int, ...]

    def __post_init__(self):
        if len(self.length) != len(self.digits):
            raise HFError("digit count differs from length")
        if any(not 0 <= d < self.base.size for d in self.digits):
            raise HFError("digit outside the base")

    def digit_sets(self) -> tuple[HFSet, ...]:
        return tuple(self.base.digits[d] for d in self.digits)

    def as_hfset(self, term_to_hf: Callable[[object], HFSet] = lambda t: t) -> HFSet:
        """The pair ``(S, (L, f))`` with ``f`` the digit assignment."""
        from .linord import from_terms

        terms = [term_to_hf(t) for t in self.length]
        order = from_terms(terms)
        f = hf.make(hf.kpair(t, d) for t, d in zip(terms, self.digit_sets()))
        return hf.kpair(self.base.carrier, hf.kpair(order.carrier, f))

    def __str__(self) -> str:
        return render(self)


def coded_value(num: Numeral) -> int:
    s = num.base.size
    v = 0
    for d in reversed(num.digits):
        v = v * s + d
    return v


def is_proper(num: Numeral) -> bool:
    return not num.digits or num.digits[-1] != 0


def digits_of(v: int, base: int) -> list[int]:
    """Little-endian digits without trailing zeros; ``[]`` for zero."""
    out = []
    while v:
        v, d = divmod(v, base)
        out.append(d)
    return out


def numeral_from_value(base: NumerationBase, v: int, max_len: Sequence) -> Numeral:
    """The proper numeral coding ``v`` whose length is a prefix of ``max_len``."""
    max_len = tuple(max_len)
    if not 0 <= v < base.size ** len(max_len):
        raise HFError(f"value {v} out of range for {len(max_len)} digits")
    ds = digits_of(v, base.size)
    return Numeral(base, max_len[: len(ds)], tuple(ds))


def numeral_fixed_length(base: NumerationBase, v: int, length: Sequence) -> Numeral:
    """The numeral of exactly this length coding ``v`` (zero padded)."""
    length = tuple(length)
    if not 0 <= v < base.size ** len(length):
        raise HFError(f"value {v} out of range for {len(length)} digits")
    ds = digits_of(v, base.size)
    return Numeral(base, length, tuple(ds + [0] * (len(length) - len(ds))))


def num_enumeration(base: NumerationBase, length: Sequence) -> tuple[Numeral, ...]:
    """Proper numerals with length a prefix of ``length``, ascending by value."""
    length = tuple(length)
    count = base.size ** len(length)
    if count > get_limits().enum_max:
        raise TooLargeError(f"{count} numerals exceed the enumeration limit")
    return tuple(numeral_from_value(base, v, length) for v in range(count))


def render(num: Numeral) -> str:
    return f"{num.base.size}⟨" + ",".join(str(d) for d in num.digits) + "⟩"


def to_json(num: Numeral) -> dict:
    return {
        "base": str(num.base.carrier.code) if num.base.carrier.code_is_small() else None,
        "base_size": num.base.size,
        "digits": list(num.digits),
        "value": str(coded_value(num)),
    }
