import io
import json

import pytest

from hfarith import hf
from hfarith.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eval_examples():
    assert run("eval", "P(O)") == (0, "{{}}  #1\n")
    assert run("eval", "{x in P(a) : O in x}", "--let", "a={{}}") == (0, "{{{}}}  #2\n")


def test_eval_syntax_error(capsys):
    code, _ = run("eval", "U(")
    assert code == 2
    assert "column 3" in capsys.readouterr().err


def test_eval_formula_and_define():
    assert run("eval", "--formula", "(all x in a) x sub a", "--let", "a=#11") == (0, "true\n")
    assert run("eval", "{one, O}", "--define", "one={O}") == (0, "{{},{{}}}  #3\n")


def test_domain_and_usage_errors():
    assert run("eval", "{a, b}")[0] == 1
    assert run("eval", "a", "--let", "a")[0] == 2
    assert run("code", "decode", "-4")[0] == 2
    assert run("enumerate", "nosuch")[0] == 1
    assert run("--budget", "bogus=1", "eval", "O")[0] == 2
    assert run("frobnicate")[0] == 2


def test_enumerate_examples():
    code, text = run("enumerate", "ack0", "-n", "4")
    assert code == 0
    assert [line.split("#")[-1] for line in text.splitlines()] == ["0", "1", "2", "3"]
    _, text = run("enumerate", "vn", "-n", "3")
    assert [line.split("\t")[1].split()[0] for line in text.splitlines()] == ["{}", "{{}}", "{{},{{}}}"]
    _, text = run("enumerate", "ackphi:double:1", "-n", "20")
    rows = [line.split("\t")[1] for line in text.splitlines()]
    assert rows[7] == "l_7" and rows[8] == "l_16" and rows[16] == "l_65536"


def test_analyze():
    assert run("analyze", "E(a)") == (0, "k=3, rank_k=4\n")


def test_code():
    assert run("code", "decode", "11") == (0, "{{},{{}},{{},{{}}}}\n")
    assert run("code", "encode", "{{},{{}},{{},{{}}}}") == (0, "11\n")
    code, text = run("--json", "code", "decode", "11")
    assert code == 0 and hf.from_json(text) is hf.decode(11)


def test_json_round_trips():
    _, text = run("--json", "eval", "P(P(O))")
    assert hf.from_json(json.loads(text)["value"]) is hf.decode(3)
    _, text = run("--json", "enumerate", "z", "-n", "4")
    rec = json.loads(text)
    assert rec["codes"] == ["0", "1", "2", "4"]
    _, text = run("--json", "analyze", "P(a)")
    assert json.loads(text) == {"term": "P(a)", "k": 2, "rank_k": 3}


def test_check_splitting_default():
    code, text = run("check", "splitting")
    assert code == 0
    summary = json.loads(text.splitlines()[-1])
    assert summary["record"] == "summary" and summary["passed"]


def test_check_seed_and_budget(monkeypatch):
    monkeypatch.setenv("EA_BUDGET", "samples=100,code_max=1024")
    a = run("--seed", "3", "check", "kuratowski")
    b = run("--seed", "3", "check", "kuratowski")
    assert a[0] == 0
    summary = json.loads(a[1].splitlines()[-1])
    assert summary["budget"]["samples"] == 100 and summary["seed"] == 3
    strip = [json.loads(x) for x in a[1].splitlines()[:-1]]
    assert strip == [json.loads(x) for x in b[1].splitlines()[:-1]]


def test_check_failure_exit_code(monkeypatch):
    import hfarith.verify as verify

    def broken(p, rng):
        g = verify.Group("always-fails")
        g.check(False, {"codes": ["#0"]})
        return [g]

    monkeypatch.setitem(verify.SUITES, "bounding", broken)
    code, text = run("check", "bounding")
    assert code == 3
    assert json.loads(text.splitlines()[-1])["passed"] is False


def test_unknown_check_budget_key():
    assert run("--budget", "nonsense=1", "check", "bounding")[0] == 1
