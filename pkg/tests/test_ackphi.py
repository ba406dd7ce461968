import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfarith.errors import HFError
from hfarith.systems import ack_phi, closure_witness_gamma, is_regular
from hfarith.systems.ackphi import (
    PrefixNumber, compute_n, lt_tower_gap, defined_successor, regularity_violation,
)


@pytest.fixture(scope="module")
def double():
    return ack_phi("double", 1)


def test_double_plan(double):
    _, plan = double
    assert plan.N == 2
    assert [plan.h(n) for n in range(4)] == [4, 8, 16, 32]
    assert [plan.stage(n).start_index for n in range(3)] == [0, 4, 16]
    assert plan.stage(3).start_index == 65536
    assert plan.stage(4).start_level == 5


def test_double_terms(double):
    sys, plan = double
    terms = sys.terms(16)
    assert terms[:8] == list(range(8))
    assert terms[8:] == list(range(16, 24))
    assert list(plan.stage_indices(2))[-1] == 23


def test_double_gamma_example(double):
    _, plan = double
    g = closure_witness_gamma(plan, 5)
    assert g.size == 16 and g.size >= 2 * 5
    assert closure_witness_gamma(plan, 1).size == plan.h(0)


@pytest.mark.parametrize("m", range(1, 17))
def test_double_gamma_closes(double, m):
    _, plan = double
    assert closure_witness_gamma(plan, m).size >= 2 * m


def test_regularity():
    assert not is_regular(lambda x: x, 1)
    assert regularity_violation(lambda x: x * x, 2, 16) == ("ii", 3, 3)
    assert not is_regular(PHI_SQUARE, 2, 16)
    assert is_regular(PHI_SQUARE, 4)
    assert is_regular(lambda x: 2 * x, 1)
    with pytest.raises(HFError):
        ack_phi("square", 2)


def PHI_SQUARE(x):
    return x * x


def test_square_plan_is_symbolic():
    _, plan = ack_phi("square", 4)
    assert plan.N == 4 == compute_n(PHI_SQUARE, 4)
    assert plan.h(0) == 65536 and plan.h(1) == 65536 ** 2
    assert plan.stage(3).start_level == 6
    assert all(plan.clause_ok(n) for n in range(3))


def test_lt_tower_gap():
    assert lt_tower_gap(10, 2)        # 10 < 16 - 4
    assert not lt_tower_gap(12, 2)
    assert lt_tower_gap(10 ** 100, 5)


def test_successor_matches_definition(double):
    sys, plan = double
    terms = sys.terms(24)
    # past l_65536 the definition needs the stage starting at 2_6
    for a, b in zip(terms[:17], terms[1:17]):
        assert sys.successor(a) == b == defined_successor(plan, a)
    assert terms[16:] == list(range(65536, 65544))


@given(st.integers(0, 31))
def test_positions_round_trip(p):
    _, plan = ack_phi("double", 1)
    assert plan.index_to_position(plan.position_to_index(p)) == p


def test_prefix_number(double):
    _, plan = double
    num = PrefixNumber(plan, 10)
    assert len(num) == 10 and num.last() == 17
    with pytest.raises(HFError):
        PrefixNumber(plan, 0).last()
    assert PrefixNumber(plan, 1 << 40).size == 1 << 40


def test_recover(double):
    sys, _ = double
    assert sys.recover(17) == [0, 1, 2, 3, 4, 5, 6, 7, 16, 17]
    with pytest.raises(HFError):
        sys.recover(9)
