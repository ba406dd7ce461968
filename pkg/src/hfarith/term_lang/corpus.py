"""Sample terms over the variables ``a`` and ``b``.

Every constructor appears.  All terms evaluate quickly when ``a`` and ``b``
have codes below ``2**12`` (members then have codes below 12, so unions are
tiny and power sets have at most 4096 members).
"""

from __future__ import annotations

CORPUS: tuple[str, ...] = (
    "a",
    "O",
    "{a, a}",
    "{a, b}",
    "{a, O}",
    "{a, {a, a}}",
    "P(a)",
    "U(a)",
    "E(a)",
    "E({a, a})",
    "U({a, {a, a}})",
    "U(P(a))",
    "P(U(a))",
    "P({a, b})",
    "{x in a : O in x}",
    "{x in P(a) : x sub a}",
    "{x in a : (all y in x) y in a}",
    "{x in a : (some y in x) y = O}",
    "{x in U(a) : ~(x in a) -> x = b}",
    "{x in P(P(O)) : x in P(a) | x = {O, O}}",
    "{x in E(a) : O in x & ~(x = O)}",
    "{{x, x} : x in a}",
    "{{x, b} : x in a}",
    "{P(x) : x in a}",
    "{U(x) : x in a}",
    "{E(x) : x in a}",
    "{{y : y in x} : x in P(a)}",
    "{{x in b : x in y} : y in U(a)}",
)

# closed term whose replacement exposes the literal k1 + k2 rule
REPLACEMENT_WITNESS = ("{{x, x} : x in a}", "{{{}},{{{}}}}")
