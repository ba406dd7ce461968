import json

import pytest

from hfarith.errors import HFError
from hfarith.verify import SUITE_DEFAULTS, SUITES, Group, SuiteReport, run_suite

SMALL = {
    "kuratowski": {"code_max": 1 << 10, "samples": 200},
    "induction-recursion": {"samples": 200},
    "splitting": {"code_max": 1 << 8, "levels": [0, 1]},
    "bounding": {"envs": 5},
    "rank": {"code_max": 1 << 8, "exact_code_max": 1 << 6, "envs": 5},
    "numeral-base": {"base_sizes": [2, 3], "max_terms": 32},
    "numeral-length": {"systems": ["len:vn:2", "len:z:3"], "max_terms": 16},
    "lex-ack": {"code_order_max": 128, "field_max": 3, "mono_code_max": 1 << 10, "lex_terms": 4, "ack_terms": 16},
    "ch-lex-measures": {"ch_terms": 4, "ack_numbers": 8},
    "ack-closure": {"k_max": 1},
    "ack-phi": {"stages": 2, "gamma_max": 64, "succ_max": 64},
    "one-point-induction": {"samples": 50},
}


def test_every_suite_has_defaults_and_a_small_budget():
    assert set(SUITES) == set(SUITE_DEFAULTS) == set(SMALL)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_small(name):
    report = run_suite(name, SMALL[name], seed=1)
    assert report.passed, report.failures
    assert report.cases > 0
    lines = [json.loads(x) for x in report.json_lines()]
    assert lines[-1]["record"] == "summary" and lines[-1]["suite"] == name
    assert all(x["record"] == "group" for x in lines[:-1])
    assert sum(x["cases"] for x in lines[:-1]) == report.cases == lines[-1]["cases"]


def test_seed_is_deterministic():
    a = run_suite("kuratowski", SMALL["kuratowski"], seed=7)
    b = run_suite("kuratowski", SMALL["kuratowski"], seed=7)
    assert a.groups == b.groups and a.cases == b.cases


def test_unknown_suite_and_keys():
    with pytest.raises(HFError):
        run_suite("nope")
    with pytest.raises(HFError):
        run_suite("bounding", {"nonsense": 1})


def test_limit_keys_are_passed_to_the_kernel():
    report = run_suite("bounding", {"envs": 2, "power_set_max": 1 << 12})
    assert report.budget["power_set_max"] == 1 << 12


def test_failures_make_the_report_fail():
    g = Group("demo")
    g.check(True)
    g.check(False, lambda: {"codes": ["#3"]})
    assert g.cases == 2 and g.failures == [{"codes": ["#3"]}]
    report = SuiteReport("demo", 2, [{"group": "demo", "codes": ["#3"]}], {}, 0, 0.0)
    assert not report.passed
    assert report.summary()["failures"] == 1
