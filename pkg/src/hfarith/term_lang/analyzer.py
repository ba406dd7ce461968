"""Static bounds on term values.

``bound_of(t) = k`` guarantees ``eval(t, env) ∈ P^k(TC({env values}))`` for
every environment, by induction on the term.  ``rank_bound_of`` turns that
into a rank bound: ``P^k(T)`` has rank ``rank(T) + k`` and
``rank(TC({a⃗})) = max rank(a_i) + 1``, so a member of it has rank below
``max rank(a_i) + k + 1``.

Replacement adds ``max(k2, 1)`` rather than ``k2``.  With a closed source
(``k2 = 0``) the source value lies in ``TC`` itself, and its image set can
sit one power level above the body's bound: ``{{x, x} : x in a}`` with
``a = {{O}, {{O}}}`` is ``{{{O}}, {{{O}}}}``, which is outside
``P^1(TC({a}))``.
"""

from __future__ import annotations

from .ast import Compr, Empty, Eps, Pair, Power, Repl, Union_, Var


def bound_of(t, *, literal_replacement: bool = False) -> int:
    """Power level ``k`` with the value of ``t`` in ``P^k(TC(env))``.

    ``literal_replacement`` uses ``k1 + k2`` for replacement, which is unsound
    when the source is a bare variable; it exists to exhibit that.
    """
    def go(t) -> int:
        if isinstance(t, Var):
            return 0
        if isinstance(t, Empty):
            return 1
        if isinstance(t, Pair):
            return max(go(t.left), go(t.right)) + 1
        if isinstance(t, Compr):
            return go(t.source) + 1
        if isinstance(t, Repl):
            k1, k2 = go(t.body), go(t.source)
            return k1 + (k2 if literal_replacement else max(k2, 1))
        if isinstance(t, Eps):
            return go(t.arg) + 3
        if isinstance(t, Power):
            return go(t.arg) + 2
        if isinstance(t, Union_):
            return go(t.arg) + 1
        raise TypeError(f"not a term: {t!r}")

    return go(t)


def rank_bound_of(t) -> int:
    """``k`` with ``rank(eval(t, env)) < max env rank + k``."""
    return bound_of(t) + 1
