import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hfsets
from hfarith import cardarith as ca
from hfarith import hf
from hfarith.errors import BudgetExceeded, HFError, TooLargeError


def _sets_of_size(n, limit=1 << 10):
    return [hf.decode(c) for c in range(limit) if hf.decode(c).size == n]


def test_card_exact_examples():
    assert ca.card_exact(hf.EMPTY) is hf.EMPTY
    assert ca.card_exact(hf.singleton(hf.EMPTY)).size == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_card_exact_properties(n):
    for s in _sets_of_size(n)[:20]:
        card = ca.card_exact(s)
        assert card.size == s.size                                   # (a)
        assert sorted(m.size for m in card) == list(range(n))          # (b)


def test_card_exact_limit():
    with pytest.raises(TooLargeError):
        ca.card_exact(hf.vn(5))


def test_ord_exact_is_size_ordered():
    lo = ca.ord_exact(hf.vn(3))
    assert [t.size for t in lo.terms] == [0, 1, 2]


def test_rank_examples():
    assert ca.rank_fast(hf.EMPTY) == 0 and len(ca.rank_exact(hf.EMPTY)) == 0
    assert ca.rank_fast(hf.vn(2)) == 2
    assert ca.rank_fast(hf.decode(2 ** 16)) == 1 + ca.rank_fast(hf.decode(16))


@given(hfsets(1 << 12))
def test_rank_properties(a):
    if a.size <= 12:
        assert ca.rank_fast(hf.power_set(a)) == ca.rank_fast(a) + 1
    assert all(ca.rank_fast(x) + 1 <= ca.rank_fast(a) for x in a)


def test_rank_exact_matches_fast():
    for c in range(1 << 10):
        a = hf.decode(c)
        if hf.transitive_closure(hf.singleton(a)).size <= 12:
            assert len(ca.rank_exact(a)) == ca.rank_fast(a)


def test_set_level_examples():
    assert ca.succ_c(hf.EMPTY) is hf.singleton(hf.EMPTY)
    assert ca.add_c(hf.vn(2), hf.vn(3)).size == 5
    assert ca.exp_c(hf.vn(2), hf.vn(3)).size == 8


@pytest.mark.parametrize("m,n", list(itertools.product(range(4), repeat=2)))
def test_set_and_size_levels_agree(m, n):
    a, b = hf.vn(m), hf.decode((1 << n) - 1)   # sizes m and n, different shapes
    assert ca.succ_c(a).size == ca.succ_size(a)
    assert ca.add_c(a, b).size == ca.add_size(a, b)
    assert ca.mul_c(a, b).size == ca.mul_size(a, b)
    assert ca.exp_c(a, b).size == ca.exp_size(a, b)


def test_exp_c_limit():
    with pytest.raises(TooLargeError):
        ca.exp_c(hf.vn(4), hf.vn(7))


@given(st.data())
def test_arithmeticality(data):
    ops = [ca.add_c, ca.mul_c, ca.exp_c]
    n = data.draw(st.integers(0, 3))
    m = data.draw(st.integers(0, 2))
    pool_n, pool_m = _sets_of_size(n, 1 << 8), _sets_of_size(m, 1 << 8)
    a, a2 = data.draw(st.sampled_from(pool_n)), data.draw(st.sampled_from(pool_n))
    b, b2 = data.draw(st.sampled_from(pool_m)), data.draw(st.sampled_from(pool_m))
    for op in ops:
        assert ca.arithmetical(op, a, b, a2, b2)


def _root_oracle(n, a):
    x = 0
    while x ** n < a:
        x += 1
    return x


def _log_oracle(s, a):
    x = 0
    while s ** x < a:
        x += 1
    return x


def test_roots_and_logs_examples():
    assert ca.nth_root(2, 9) == 3
    assert ca.nth_root(2, 10) == 4
    assert ca.nth_root(3, 0) == 0
    assert ca.log_base(2, 8) == 3
    assert ca.log_base(2, 5) == 3
    assert ca.log_base(10, 1) == 0
    with pytest.raises(HFError):
        ca.log_base(1, 5)


@given(st.integers(1, 5), st.integers(0, 5000))
def test_nth_root_oracle(n, a):
    x = ca.nth_root(n, a)
    assert x == _root_oracle(n, a)
    assert a <= x ** n
    assert ca.nth_root(n, a ** n) == a


@given(st.integers(2, 10), st.integers(0, 5000))
def test_log_oracle(s, a):
    assert ca.log_base(s, a) == _log_oracle(s, a)
    assert ca.log_base(s, s ** (a % 20)) == a % 20


def test_sizes_accept_sets():
    assert ca.nth_root(2, hf.vn(9)) == 3
    assert ca.log_base(hf.vn(2), hf.vn(8)) == 3


def test_suplog_and_tower():
    assert ca.suplog2(1) == 0
    assert ca.suplog2(5) == 3
    assert ca.suplog2(16) == 3
    assert [ca.tower2(k) for k in range(5)] == [1, 2, 4, 16, 65536]
    assert ca.tower(3, 2) == 2 ** 8
    with pytest.raises(BudgetExceeded):
        ca.tower2(6)


def test_iterexp_witness():
    lo = ca.iterexp_witness(1, 2, 4)
    assert [t.size for t in lo.terms] == [1, 2, 4]
    assert ca.check_iterexp_clauses(lo, 1, 2, 4)
    assert len(ca.iterexp_witness(1, 0, 1)) == 1
    assert ca.iterexp_witness(1, 2, 5) is None


def test_bounded_sum_and_product():
    assert ca.bounded_sum(lambda x: x, 4) == 6
    assert ca.bounded_product(lambda x: x + 1, 4) == 24
    assert ca.bounded_sum(lambda x: 0, 17) == 0


def test_monus():
    assert ca.monus(3, 5) == 0 and ca.monus(5, 3) == 2
