"""Maps between numbers of different systems.

Each map takes a number of one system to a number of another with a known
size relation: equal size for the measures between CH, VN, Z and LEX, and
``|S|**x``, ``log_S x``, ``x**|L|``, the ``|L|``-th root and ``suplog2`` for the
positional and ACK maps.
"""

from __future__ import annotations

from .. import hf
from ..cardarith import log_base, nth_root
from ..errors import HFError
from ..hf import HFSet
from ..linord import LinearOrdering, from_terms, recursion_along
from ..numerals import coded_value
from .core import CH, VN, Z, IterationSystem, SystemNumber, gen_check
from .lexack import ACK, LEX, lex_anchor, lex_step


def _require(sys: IterationSystem, number) -> tuple:
    terms = number.terms if isinstance(number, (SystemNumber, LinearOrdering)) else tuple(number)
    if not gen_check(sys, terms):
        raise HFError(f"not a number of {sys.name}")
    return tuple(terms)


def _terms_below(sys: IterationSystem, top: HFSet) -> tuple:
    """Terms of ``sys`` lying in ``P(top)``, in order."""
    out = []
    for t in sys.iterate():
        if not hf.is_subset(t, top):
            break
        out.append(t)
    return tuple(out)


def ch_to_vn(number) -> SystemNumber:
    ts = _require(CH, number)
    if not ts:
        return SystemNumber(VN, ())
    return SystemNumber(VN, _terms_below(VN, ts[-1]))


def ch_to_z(number) -> SystemNumber:
    ts = _require(CH, number)
    if not ts:
        return SystemNumber(Z, ())
    return SystemNumber(Z, _terms_below(Z, ts[-1]))


def lex_ch(number) -> SystemNumber:
    """``[L_0..L_k] -> [Field(L_0)..Field(L_k)]``."""
    ts = _require(LEX, number)
    return SystemNumber(CH, tuple(lo.field for lo in ts))


def ch_lex(number) -> SystemNumber:
    """Recursion along the CH number with ``g(L) = Lex(L)`` from ``[]``."""
    ts = _require(CH, number)
    carriers = recursion_along(
        from_terms(ts), hf.EMPTY, lambda c: lex_step(LinearOrdering.from_carrier(c)).carrier
    )
    return SystemNumber(LEX, tuple(LinearOrdering.from_carrier(c) for c in carriers))


def base_up(n_sys: IterationSystem, base_sys: IterationSystem, number) -> SystemNumber:
    """η₁: an N-number of length ``k`` to the ``N[S]`` number of size ``|S|**k``."""
    ts = _require(n_sys, number)
    size = base_sys.initial.base.size ** len(ts)
    return SystemNumber(base_sys, tuple(base_sys.terms(size)))


def base_down(n_sys: IterationSystem, base_sys: IterationSystem, number) -> SystemNumber:
    """η₂: an ``N[S]`` number to the N-number given by the length of its last
    numeral; the number holding only the zero numeral goes to the empty number.
    """
    ts = _require(base_sys, number)
    if not ts or coded_value(ts[-1]) == 0:
        out = ()
    else:
        out = tuple(ts[-1].length)
    if ts and len(out) != log_base(base_sys.initial.base.size, len(ts)):
        raise HFError("length does not match log_S of the size")
    return SystemNumber(n_sys, out)


def len_up(n_sys: IterationSystem, len_sys: IterationSystem, number) -> SystemNumber:
    """An N-number ``M`` to the ``N⟨L⟩`` number of size ``|M|**|L|``."""
    ts = _require(n_sys, number)
    width = len(len_sys.initial.length)
    return SystemNumber(len_sys, tuple(len_sys.terms(len(ts) ** width)))


def len_down(n_sys: IterationSystem, len_sys: IterationSystem, number) -> SystemNumber:
    """An ``N⟨L⟩`` number ending in base ``InSeg(M)`` to ``M``; numbers of size
    below 2 go to the N-number of the same size.
    """
    ts = _require(len_sys, number)
    width = len(len_sys.initial.length)
    if len(ts) < 2:
        return SystemNumber(n_sys, tuple(n_sys.terms(len(ts))))
    m = ts[-1].base.size
    if m != nth_root(width, len(ts)):
        raise HFError("base size does not match the root of the size")
    return SystemNumber(n_sys, tuple(n_sys.terms(m)))


def ack_to_ch_suplog(number) -> SystemNumber:
    """An ACK number ending at ``l_n`` to ``[V_0..V_k]`` where ``L_k ⊆* l_n ⊊* L_{k+1}``."""
    size = len(_require(ACK, number))
    if size == 0:
        return SystemNumber(CH, ())
    k = lex_anchor(size - 1)
    return SystemNumber(CH, tuple(CH.terms(k + 1)))
