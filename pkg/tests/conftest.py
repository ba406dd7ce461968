"""Shared strategies and independent oracles."""

from hypothesis import strategies as st

from hfarith import hf


def codes(max_code=1 << 12):
    return st.integers(min_value=0, max_value=max_code - 1)


def hfsets(max_code=1 << 12):
    return codes(max_code).map(hf.decode)


def nested_sets(max_leaves=12):
    """Sets built structurally, not through codes."""
    return st.recursive(
        st.just(hf.EMPTY),
        lambda kids: st.lists(kids, max_size=3).map(hf.make),
        max_leaves=max_leaves,
    )


def distinct_terms(max_code=1 << 10, max_len=6):
    return st.lists(codes(max_code), max_size=max_len, unique=True).map(lambda cs: [hf.decode(c) for c in cs])


# oracles: plain frozenset models, no interning, no code arithmetic


def oracle_decode(n):
    """Ackermann decoding into nested frozensets."""
    return frozenset(oracle_decode(i) for i in range(n.bit_length()) if n >> i & 1)


def oracle_encode(fs):
    return sum(1 << oracle_encode(x) for x in fs)


def to_frozen(s):
    return frozenset(to_frozen(x) for x in s)
