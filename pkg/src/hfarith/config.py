"""Materialization limits.

Limits live in a context variable so tests and CLI invocations can tighten or
loosen them locally::

    with limits(power_set_max=1 << 10):
        ...
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    power_set_max: int = 1 << 20      # members of a materialized power set
    fan_tc_max: int = 12              # |TC(S)| allowed for epsilon fans
    card_exact_max: int = 4           # |S| allowed for exact Card(S)
    exp_set_max: int = 1 << 12        # functions built by set-level exponentiation
    code_bits_max: int = 1 << 24      # bit length of a lazily computed code
    tower_bits_max: int = 1 << 20     # bit length of a tower value
    enum_max: int = 1 << 20           # terms produced by one enumeration
    lex_field_max: int = 16           # field size for a materialized Lex step

    def replace(self, **kw) -> "Limits":
        return dataclasses.replace(self, **kw)


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("limits", default=Limits())


def get_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides):
    token = _current.set(_current.get().replace(**overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def parse_budget(text: str) -> dict[str, int]:
    """Parse ``k=v,k=v``; values accept ``2**20`` and ``1<<20`` forms."""
    out: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        if "=" not in item:
            raise ValueError(f"budget item {item!r} is not k=v")
        key, val = (s.strip() for s in item.split("=", 1))
        out[key] = _parse_int(val)
    return out


def _parse_int(val: str) -> int:
    if "**" in val:
        b, e = val.split("**", 1)
        return int(b) ** int(e)
    if "<<" in val:
        b, e = val.split("<<", 1)
        return int(b) << int(e)
    return int(val)


def env_budget() -> dict[str, int]:
    return parse_budget(os.environ.get("EA_BUDGET", ""))


def split_budget(budget: dict[str, int]) -> tuple[dict[str, int], dict[str, int]]:
    """Separate keys that are Limits fields from suite-specific keys."""
    names = {f.name for f in dataclasses.fields(Limits)}
    lim = {k: v for k, v in budget.items() if k in names}
    rest = {k: v for k, v in budget.items() if k not in names}
    return lim, rest
