"""Natural number systems and the maps between them."""

from __future__ import annotations

import functools

from ..errors import HFError
from ..hf import vn
from ..numerals import NumerationBase
from .ackphi import PHIS, PrefixNumber, StagePlan, ack_phi, closure_witness_gamma, is_regular
from .core import (
    CH,
    VN,
    Z,
    IterationSystem,
    SystemNumber,
    gen_check,
    natural_upto,
    nth_number,
    nth_term,
    recover_number,
)
from .lexack import (
    ACK,
    ACK0,
    LEX,
    DontCare,
    ack0_successor,
    ack_element,
    ack_successor,
    ack_term,
    lex_leq,
    lex_step,
    lex_term,
)
from .positional import fixed_base, fixed_length

BUILTIN = {s.name: s for s in (VN, Z, CH, LEX, ACK, ACK0)}


@functools.lru_cache(maxsize=None)
def get_system(spec: str) -> IterationSystem:
    """Parse ``vn``, ``base:<sys>:<n>``, ``len:<sys>:<n>``, ``ackphi:<phi>:<K>``.

    Compound forms nest from the left, e.g. ``base:base:vn:2:3``.
    """
    spec = spec.strip()
    if spec in BUILTIN:
        return BUILTIN[spec]
    head, _, rest = spec.partition(":")
    if head in ("base", "len"):
        inner, _, size = rest.rpartition(":")
        if not inner or not size.isdigit():
            raise HFError(f"bad system spec {spec!r}")
        n_sys = get_system(inner)
        k = int(size)
        if head == "base":
            return fixed_base(n_sys, NumerationBase(vn(k)))
        return fixed_length(n_sys, VN.terms(k))
    if head == "ackphi":
        name, _, k = rest.partition(":")
        if name not in PHIS or not k.isdigit():
            raise HFError(f"bad system spec {spec!r}")
        return ack_phi(name, int(k))[0]
    raise HFError(f"unknown system {spec!r}")


__all__ = [
    "ACK", "ACK0", "CH", "LEX", "VN", "Z", "PHIS", "BUILTIN",
    "DontCare", "IterationSystem", "PrefixNumber", "StagePlan", "SystemNumber",
    "ack0_successor", "ack_element", "ack_phi", "ack_successor", "ack_term",
    "closure_witness_gamma", "fixed_base", "fixed_length", "gen_check", "get_system",
    "is_regular", "lex_leq", "lex_step", "lex_term", "natural_upto", "nth_number",
    "nth_term", "recover_number",
]
