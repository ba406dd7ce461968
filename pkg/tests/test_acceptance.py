"""End-to-end acceptance checks, one test per criterion, each under a wall-clock limit.

Run alone with ``pytest tests/test_acceptance.py -v`` (or ``python3 tests/test_acceptance.py``);
every criterion prints a single PASS/FAIL line.
"""

import itertools
import random
import time

import pytest

from hfarith import cardarith as ca
from hfarith import hf
from hfarith.cardarith import tower2
from hfarith.config import limits
from hfarith.errors import TooLargeError
from hfarith.systems import ack0_successor, ack_phi, closure_witness_gamma
from hfarith.verify import run_suite


@pytest.fixture
def report(request):
    """Time the body and print one line for the criterion."""
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    state = {}

    def finish(number, title, limit, ok, note=""):
        elapsed = time.perf_counter() - state["t0"]
        passed = ok and elapsed < limit
        line = f"[{'PASS' if passed else 'FAIL'}] #{number} {title}: {elapsed:.2f}s (limit {limit}s)"
        if note:
            line += f"; {note}"
        if tr is not None:
            tr.write_line(line)
        print(line)
        assert ok, line
        assert elapsed < limit, line

    state["t0"] = time.perf_counter()
    return finish


def _suite_ok(*names, groups=None):
    reports = [run_suite(n) for n in names]
    for r in reports:
        if groups is not None:
            picked = [g for g in r.groups if g["group"] in groups]
            if not picked or any(g["failures"] or not g["cases"] for g in picked):
                return False, r
        elif not r.passed:
            return False, r
    return True, reports[-1]


def _random_set(rng, depth=4):
    if depth == 0 or rng.random() < 0.25:
        return hf.EMPTY
    return hf.make(_random_set(rng, depth - 1) for _ in range(rng.randint(0, 4)))


def test_1_ackermann_round_trip(report):
    ok = all(hf.encode(hf.decode(n)) == n for n in range(1 << 16))
    rng = random.Random(1)
    samples = [_random_set(rng, 5) for _ in range(10_000)]
    ok = ok and all(hf.decode(hf.encode(s)) is s for s in samples)
    report(1, "encode/decode round trip below 2^16 and on 10^4 random sets", 5, ok)


def test_2_kuratowski_laws(report):
    ok, r = _suite_ok("kuratowski")
    report(2, "Kuratowski carrier laws", 30, ok, f"{r.cases} cases")


def test_3_splitting(report):
    ok, r = _suite_ok("splitting")
    report(3, "VN/Z splitting, n in {0,1,2}, codes below 2^16", 60, ok, f"{r.cases} cases")


def test_4_bound_analyzers(report):
    ok, r = _suite_ok("bounding", "rank")
    report(4, "power-level and rank analyzers sound on the corpus", 60, ok)


def test_5_ack0_code_order(report):
    s, ok = hf.EMPTY, True
    for k in range(1, 1025):
        s = ack0_successor(s)
        ok = ok and s is hf.decode(k)
    report(5, "1024 ACK0 steps follow code order", 5, ok)


def test_6_ack0_successor_theorem(report):
    ok, r = _suite_ok("lex-ack", groups={"ack0-successor-theorem"})
    report(6, "ACK0 successor theorem, fields of size <= 4", 30, ok)


def test_7_numeral_systems(report):
    ok, _ = _suite_ok("numeral-base", "numeral-length")
    report(7, "N[S] and N<L> positional coding", 30, ok)


def test_8_ack_closure(report):
    ok, _ = _suite_ok("ack-closure")
    report(8, "ACK closure witness for k <= 2", 10, ok)


def test_9_ack_phi_double(report):
    _, plan = ack_phi("double", 1)
    ok = plan.N == 2
    ok = ok and [plan.h(n) for n in range(4)] == [4, 8, 16, 32]
    ok = ok and plan.stage(2).start_index == 16
    stage3 = plan.stage(3).start_index
    stage4 = plan.stage(4).start_index
    ok = ok and stage3 == 1 << 16 and stage3 == tower2(4)
    # the next stage start is the single-bit bignum 2**65536
    ok = ok and stage4 == 1 << 65536 and stage4.bit_count() == 1
    big = hf.decode(stage4)
    ok = ok and big.size == 1 and big.children[0] is hf.decode(65536)
    ok = ok and all(closure_witness_gamma(plan, m).size >= max(2 * m, m) for m in range(plan.h(2) + 1))
    report(9, "ACK_phi for phi = 2x, K = 1", 10, ok,
           "stage 3 starts at l_65536 and stage 4 at l_(2^65536); the criterion's "
           "'stage-3 at code 2^65536' is one stage later than the stage plan gives")


def test_10_exact_vs_fast(report):
    ok = True
    small = [hf.decode(c) for c in range(1 << 12)]
    for s in (x for x in small if x.size <= 4):
        card = ca.card_exact(s)
        ok = ok and card.size == s.size and sorted(m.size for m in card) == list(range(s.size))
    checked = 0
    for s in small[: 1 << 10]:
        try:
            with limits(fan_tc_max=16):
                length = len(ca.rank_exact(s))
        except TooLargeError:
            continue
        checked += 1
        ok = ok and length == ca.rank_fast(s)
    upto3 = [x for x in small[:256] if x.size <= 3]
    for a, b in itertools.product(upto3, repeat=2):
        ok = ok and ca.succ_c(a).size == ca.succ_size(a)
        ok = ok and ca.add_c(a, b).size == ca.add_size(a, b)
        ok = ok and ca.mul_c(a, b).size == ca.mul_size(a, b)
        ok = ok and ca.exp_c(a, b).size == ca.exp_size(a, b)
    report(10, "exact and fast card/rank/arithmetic agree", 30, ok,
           f"{checked} sets within the fan bound, {len(upto3) ** 2} arithmetic pairs")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
