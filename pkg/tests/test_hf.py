import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import codes, hfsets, nested_sets, oracle_decode, oracle_encode, to_frozen
from hfarith import hf
from hfarith.config import limits
from hfarith.errors import EmptySetError, ParseError, TooLargeError


def test_small_codes():
    assert hf.decode(0) is hf.EMPTY
    assert hf.render(hf.decode(1)) == "{{}}"
    assert hf.render(hf.decode(2)) == "{{{}}}"
    assert hf.render(hf.decode(3)) == "{{},{{}}}"
    # bits 0, 1, 3
    assert hf.render(hf.decode(11)) == "{{},{{}},{{},{{}}}}"


@given(codes(1 << 16))
def test_decode_matches_oracle(n):
    assert to_frozen(hf.decode(n)) == oracle_decode(n)


@given(nested_sets())
def test_encode_matches_oracle(s):
    assert s.code == oracle_encode(to_frozen(s))
    assert hf.decode(s.code) is s


def test_big_single_bit_code():
    s = hf.decode(2 ** 65536)
    assert s.size == 1 and s.children[0].code == 65536
    assert s.code == 2 ** 65536


@given(hfsets(), hfsets())
def test_order_is_code_order(a, b):
    assert (a < b) == (a.code < b.code)
    assert (a == b) == (a.code == b.code)


@given(nested_sets(), nested_sets())
def test_structural_interning(a, b):
    assert (a is b) == (to_frozen(a) == to_frozen(b))


@given(hfsets(), hfsets())
def test_set_algebra(a, b):
    fa, fb = to_frozen(a), to_frozen(b)
    assert to_frozen(hf.union(a, b)) == fa | fb
    assert to_frozen(hf.intersection(a, b)) == fa & fb
    assert to_frozen(hf.difference(a, b)) == fa - fb
    assert hf.is_subset(a, b) == (fa <= fb)
    assert to_frozen(hf.pair_set(a, b)) == frozenset({fa, fb})


@given(hfsets(1 << 10))
def test_power_set(a):
    p = hf.power_set(a)
    assert p.size == 2 ** a.size
    assert all(hf.is_subset(x, a) for x in p)
    assert list(p.children) == sorted(p.children, key=lambda x: x.code)


def test_power_set_limit():
    with limits(power_set_max=4):
        hf.power_set(hf.vn(2))
        with pytest.raises(TooLargeError):
            hf.power_set(hf.vn(3))


@given(hfsets())
def test_union_all_and_tc(a):
    fa = to_frozen(a)
    assert to_frozen(hf.union_all(a)) == frozenset().union(*fa)
    tc = hf.transitive_closure(a)
    assert hf.is_transitive(tc)
    assert hf.is_subset(a, tc)


@given(hfsets(1 << 10))
def test_comprehension_and_replacement(a):
    evens = hf.comprehension(a, lambda x: x.size % 2 == 0)
    assert all(x.size % 2 == 0 for x in evens) and hf.is_subset(evens, a)
    sing = hf.replacement(a, hf.singleton)
    assert sing.size == a.size


def test_choose():
    assert hf.choose(hf.decode(6)) is hf.decode(1)
    with pytest.raises(EmptySetError):
        hf.choose(hf.EMPTY)


def test_kpair():
    a, b = hf.decode(1), hf.decode(2)
    assert hf.kpair(a, b) is hf.make([hf.singleton(a), hf.pair_set(a, b)])
    assert hf.kpair(a, a) is hf.singleton(hf.singleton(a))


@given(hfsets(1 << 8))
def test_epsilon_fan_chains(a):
    chains = list(hf.epsilon_chains(a))
    for c in chains:
        assert c[0] in a
        assert all(y in x for x, y in zip(c, c[1:]))
    if hf.transitive_closure(a).size <= 12:
        assert hf.epsilon_fan(a).size == len({hf.chain_carrier(c) for c in chains})


def test_epsilon_fan_limit():
    with limits(fan_tc_max=2):
        with pytest.raises(TooLargeError):
            hf.epsilon_fan(hf.vn(3))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_member_of_iterated_power_agrees_with_materialized(n):
    for t in (hf.EMPTY, hf.vn(1), hf.vn(2), hf.transitive_closure(hf.singleton(hf.zermelo(2)))):
        if t.size > 2 and n == 2:
            continue
        power = hf.iterated_power(t, n)
        for c in range(1 << 10):
            a = hf.decode(c)
            assert hf.member_of_iterated_power(a, n, t) == (a in power)


def test_numerals():
    assert hf.render(hf.vn(2)) == "{{},{{}}}"
    assert hf.render(hf.zermelo(3)) == "{{{{}}}}"


@given(nested_sets())
def test_text_and_json_round_trip(s):
    assert hf.parse_hf(hf.render(s)) is s
    assert hf.parse_hf(hf.render_code(s)) is s
    assert hf.from_json(hf.to_json(s)) is s


@pytest.mark.parametrize("text,col", [("{", 2), ("{{},", 5), ("x", 1), ("{} {}", 4), ("#", 2)])
def test_parse_errors_carry_columns(text, col):
    with pytest.raises(ParseError) as info:
        hf.parse_hf(text)
    assert info.value.column == col


def test_parse_accepts_spaces_and_codes():
    assert hf.parse_hf("{ {}, {{}}, {{},{{}}} }") is hf.decode(11)
    assert hf.parse_hf("{#0, #1}") is hf.decode(3)


def test_rank():
    assert hf.EMPTY.rank == 0
    assert hf.vn(2).rank == 2
    assert hf.decode(2 ** 16).rank == 1 + hf.decode(16).rank
