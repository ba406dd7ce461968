"""Named, budgeted property suites.

Each suite checks one claim at desk scale and returns a :class:`SuiteReport`.
A budget is a dict: keys naming :class:`~hfarith.config.Limits` fields tighten
or loosen the kernel limits for the run, the rest are suite parameters (the
defaults are listed per suite in ``SUITE_DEFAULTS``).  Randomized suites draw
from ``random.Random(seed)``, so a report is reproducible from its seed and
budget.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import cardarith as ca
from . import hf
from . import linord
from .config import limits, split_budget
from .errors import HFError
from .hf import EMPTY, HFSet
from .numerals import coded_value, num_enumeration, vn_base
from .systems import (
    ACK, CH, LEX, VN, Z, ack0_successor, ack_element, ack_phi, ack_successor,
    ack_term, closure_witness_gamma, get_system, is_regular, lex_leq, lex_step, lex_term,
    recover_number,
)
from .systems.ackphi import PHIS, defined_successor
from .systems.lexack import DontCare, lex_anchor, lex_size
from .systems.measures import ack_to_ch_suplog, base_down, base_up, ch_lex, len_down, len_up, lex_ch
from .systems.core import SystemNumber
from .term_lang import CORPUS, bound_of, eval_term, parse_term, rank_bound_of

MAX_REPORTED = 10


@dataclass
class Group:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, counterexample: Callable[[], object] | object = None) -> bool:
        self.cases += 1
        if not ok:
            self.failures.append(counterexample() if callable(counterexample) else counterexample)
        return ok


@dataclass
class SuiteReport:
    name: str
    cases: int
    failures: list[dict]
    budget: dict
    seed: int
    wall_time: float
    groups: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "record": "summary", "suite": self.name, "passed": self.passed,
            "cases": self.cases, "failures": len(self.failures),
            "counterexamples": self.failures[:MAX_REPORTED],
            "budget": self.budget, "seed": self.seed,
            "wall_time": round(self.wall_time, 3),
        }

    def json_lines(self) -> list[str]:
        return [json.dumps(g, default=str) for g in self.groups] + [json.dumps(self.summary(), default=str)]


def _minimize(fails: list) -> list:
    """Smallest counterexamples first: sort by the codes they mention."""
    def key(f):
        codes = f.get("codes", ()) if isinstance(f, dict) else ()
        return (len(str(codes)), str(codes))
    return sorted(fails, key=key)[:MAX_REPORTED]


def _codes(*sets: HFSet) -> list[str]:
    return [hf.render_code(s) for s in sets]


# kuratowski


def _chain_oracle(s: HFSet) -> bool:
    """A carrier is a strict ⊆-chain with sizes 1..n."""
    ms = sorted(s.children, key=lambda x: x.size)
    if [m.size for m in ms] != list(range(1, len(ms) + 1)):
        return False
    return all(hf.is_subset(a, b) for a, b in zip(ms, ms[1:]))


def suite_kuratowski(p: dict, rng: random.Random) -> list[Group]:
    g_ex, g_rand, g_pre = Group("exhaustive-carriers"), Group("random-from-terms"), Group("prefix-is-subset")
    valid = []
    for n in range(p["code_max"]):
        s = hf.decode(n)
        ok = linord.validate(s)
        g_ex.check(ok == _chain_oracle(s), {"codes": _codes(s), "why": "validity disagrees with chain oracle"})
        if ok:
            lo = linord.LinearOrdering.from_carrier(s)
            valid.append(lo)
            g_ex.check(lo.field.size == len(lo), {"codes": _codes(s), "why": "|Field| != |L|"})
            g_ex.check(linord.from_terms(lo.terms).carrier is s, {"codes": _codes(s), "why": "rebuild"})
    for a, b in itertools.product(valid, repeat=2):
        g_pre.check(linord.is_initial_segment(a, b) == hf.is_subset(a.carrier, b.carrier),
                    {"codes": _codes(a.carrier, b.carrier)})
    for _ in range(p["samples"]):
        k = rng.randrange(p["max_len"] + 1)
        terms = [hf.decode(c) for c in rng.sample(range(p["term_code_max"]), k)]
        lo = linord.from_terms(terms)
        bad = {"codes": _codes(*terms)}
        g_rand.check(linord.validate(lo.carrier), bad)
        g_rand.check(lo.field is hf.make(terms) and lo.field.size == len(lo), bad)
        g_rand.check(linord.LinearOrdering.from_carrier(lo.carrier).terms == tuple(terms), bad)
        if k >= 2:
            i, j = sorted(rng.sample(range(k), 2))
            g_rand.check(linord.less_than(lo, terms[i], terms[j]) and not linord.less_than(lo, terms[j], terms[i]), bad)
            g_rand.check(lo.next(terms[i]) is terms[i + 1] and lo.prev(terms[j]) is terms[j - 1], bad)
            g_rand.check(hf.is_subset(lo.prefix(i).carrier, lo.prefix(j).carrier)
                         and linord.is_initial_segment(lo.prefix(i), lo.prefix(j)), bad)
    return [g_ex, g_pre, g_rand]


# induction and recursion


def suite_induction_recursion(p: dict, rng: random.Random) -> list[Group]:
    g_ind, g_rec = Group("induction"), Group("recursion")
    for _ in range(p["samples"]):
        k = rng.randrange(1, p["max_len"] + 1)
        terms = [hf.decode(c) for c in rng.sample(range(p["term_code_max"]), k)]
        lo = linord.from_terms(terms)
        # predicates: random code sets, biased towards ones satisfying the premises
        cut = rng.randrange(k + 1)
        good = {t for t in terms[:cut]} if rng.random() < 0.5 else set(rng.sample(terms, rng.randrange(k + 1)))
        if rng.random() < 0.25:
            good = set(terms)
        premises, conclusion = linord.induction_holds(lo, lambda x: x in good)
        g_ind.check(not premises or conclusion, {"codes": _codes(*terms)})
        # a random local function g on a random S, with a in S
        pool = [hf.decode(c) for c in rng.sample(range(p["term_code_max"]), rng.randrange(1, 8))]
        table = {x: rng.choice(pool) for x in pool}
        a = rng.choice(pool)
        f1 = linord.recursion_along(lo, a, table.__getitem__)
        f2 = linord.recursion_along(lo, a, table.__getitem__)
        fold = [a]
        for _t in terms[1:]:
            fold.append(table[fold[-1]])
        ok = f1 == f2 == tuple(fold) and f1[0] is a
        ok = ok and all(f1[lo.position(lo.next(t))] is table[f1[lo.position(t)]] for t in terms[:-1])
        g_rec.check(ok, {"codes": _codes(*terms)})
    return [g_ind, g_rec]


# splitting


def _mip_mask(t: HFSet, n: int, code_max: int) -> int:
    """Bit ``a`` set iff ``decode(a) ∈ P^n(t)``, for ``a < code_max``."""
    mask = 0
    for a in range(code_max):
        if hf.member_of_iterated_power(hf.decode(a), n, t):
            mask |= 1 << a
    return mask


def suite_splitting(p: dict, rng: random.Random) -> list[Group]:
    groups = []
    cm = p["code_max"]
    vs, zs = VN.terms(p["max_term"] + 1), Z.terms(p["max_term"] + 1)
    for n in p["levels"]:
        g = Group(f"n={n}")
        target = _mip_mask(EMPTY, n + 2, cm)
        vmasks = [_mip_mask(hf.transitive_closure(hf.singleton(v)), n, cm) for v in vs]
        zmasks = [_mip_mask(hf.transitive_closure(hf.singleton(z)), n, cm) for z in zs]
        for (i, vm), (j, zm) in itertools.product(enumerate(vmasks), enumerate(zmasks)):
            bad = vm & zm & ~target
            # one case per a: bit operations check all codes of this pair at once
            g.cases += cm - 1
            g.check(bad == 0, lambda: {
                "codes": _codes(hf.decode((bad & -bad).bit_length() - 1)),
                "v": i, "z": j, "n": n,
            })
        groups.append(g)
    return groups


# bounding and rank


def _random_env(rng: random.Random, names: Iterable[str], code_max: int) -> dict[str, HFSet]:
    return {x: hf.decode(rng.randrange(code_max)) for x in sorted(names)}


def suite_bounding(p: dict, rng: random.Random) -> list[Group]:
    groups = []
    with limits(fan_tc_max=max(p["fan_tc_max"], 1)):
        for text in CORPUS:
            t = parse_term(text)
            k = bound_of(t)
            g = Group(f"term {text}")
            for _ in range(p["envs"]):
                env = _random_env(rng, ("a", "b"), p["code_max"])
                v = eval_term(t, env)
                base = hf.transitive_closure(hf.make(env.values()))
                g.check(hf.member_of_iterated_power(v, k, base),
                        lambda: {"term": text, "k": k, "codes": _codes(*env.values())})
            groups.append(g)
    return groups


def suite_rank(p: dict, rng: random.Random) -> list[Group]:
    g_pow, g_mem, g_exact, g_an = Group("rank-power"), Group("rank-member"), Group("rank-exact"), Group("rank-analyzer")
    for c in range(p["code_max"]):
        a = hf.decode(c)
        if a.size <= 12:
            g_pow.check(ca.rank_fast(hf.power_set(a)) == ca.rank_fast(a) + 1, {"codes": _codes(a)})
        g_mem.check(all(ca.rank_fast(x) + 1 <= ca.rank_fast(a) for x in a), {"codes": _codes(a)})
    for c in range(p["exact_code_max"]):
        a = hf.decode(c)
        if hf.transitive_closure(hf.singleton(a)).size <= 8:
            g_exact.check(len(ca.rank_exact(a)) == ca.rank_fast(a), {"codes": _codes(a)})
    with limits(fan_tc_max=max(p["fan_tc_max"], 1)):
        for text in CORPUS:
            t = parse_term(text)
            rk = rank_bound_of(t)
            for _ in range(p["envs"]):
                env = _random_env(rng, ("a", "b"), p["env_code_max"])
                v = eval_term(t, env)
                top = max(x.rank for x in env.values())
                g_an.check(ca.rank_fast(v) < top + rk, lambda: {"term": text, "codes": _codes(*env.values())})
    return [g_pow, g_mem, g_exact, g_an]


# numerals


def suite_numeral_base(p: dict, rng: random.Random) -> list[Group]:
    g_code, g_num, g_rec, g_meas = Group("positional-coding"), Group("num-size"), Group("recovery"), Group("measures")
    for name, size in itertools.product(p["systems"], p["base_sizes"]):
        sys = get_system(f"base:{name}:{size}")
        count = min(size ** 4, p["max_terms"])
        terms = sys.terms(count)
        for k, num in enumerate(terms):
            g_code.check(coded_value(num) == k, {"system": sys.name, "k": k})
        for k in rng.sample(range(count), min(4, count)):
            g_rec.check(recover_number(sys, terms[k]).terms == tuple(terms[: k + 1]), {"system": sys.name, "k": k})
        n_sys = get_system(name)
        for ell in range(0, 4):
            number = SystemNumber(n_sys, tuple(n_sys.terms(ell)))
            up = base_up(n_sys, sys, number)
            g_meas.check(len(up) == size ** ell, {"system": sys.name, "len": ell})
            if ell:
                g_meas.check(base_down(n_sys, sys, up).terms == number.terms, {"system": sys.name, "len": ell})
    for size in p["base_sizes"]:
        base = vn_base(size)
        for ell in range(0, 5):
            length = tuple(VN.terms(ell))
            nums = num_enumeration(base, length)
            ok = len(nums) == size ** ell and [coded_value(x) for x in nums] == list(range(len(nums)))
            g_num.check(ok, {"base": size, "len": ell})
    return [g_code, g_num, g_rec, g_meas]


def suite_numeral_length(p: dict, rng: random.Random) -> list[Group]:
    g_code, g_base, g_meas = Group("positional-coding"), Group("base-transitions"), Group("measures")
    for spec in p["systems"]:
        sys = get_system(spec)
        width = len(sys.initial.length)
        terms = sys.terms(p["max_terms"])
        for k, num in enumerate(terms):
            g_code.check(coded_value(num) == k, {"system": spec, "k": k})
            m = 2
            while k >= m ** width:
                m += 1
            g_base.check(num.base.size == m, {"system": spec, "k": k, "base": num.base.size})
            if k and terms[k - 1].base.size != m:
                # first numeral of a new base codes |S|^|L| of the old base
                g_base.check(k == (m - 1) ** width, {"system": spec, "k": k})
        n_name = spec.split(":")[1]
        n_sys = get_system(n_name)
        for m in range(2, 5):
            if m ** width > p["max_terms"]:
                break
            number = SystemNumber(n_sys, tuple(n_sys.terms(m)))
            up = len_up(n_sys, sys, number)
            g_meas.check(len(up) == m ** width, {"system": spec, "m": m})
            g_meas.check(len_down(n_sys, sys, up).terms == number.terms, {"system": spec, "m": m})
    return [g_code, g_base, g_meas]


# Lex and ACK


def suite_lex_ack(p: dict, rng: random.Random) -> list[Group]:
    g_code, g_thm, g_mono, g_lexack, g_trans, g_succ = (
        Group("ack0-code-order"), Group("ack0-successor-theorem"), Group("lex-monotone"),
        Group("lex-in-ack"), Group("transitive-fields"), Group("ack-successor"),
    )
    s = EMPTY
    for k in range(p["code_order_max"]):
        g_code.check(s is hf.decode(k), {"codes": _codes(s), "k": k})
        s = ack0_successor(s)
    # successor theorem over ACK terms anchored at LEX terms with small fields
    for length in range(1, 1 << p["field_max"]):
        j = lex_anchor(length)
        anchor = lex_term(j)
        if len(anchor) > p["field_max"]:
            break
        sn = ack_element(length - 1)
        nxt = ack0_successor(sn)
        g_thm.check(lex_leq(anchor, sn, nxt) and sn is not nxt, {"clause": "i", "codes": _codes(sn)})
        for a in hf.power_set(anchor.field):
            if lex_leq(anchor, sn, a) and a is not sn:
                g_thm.check(lex_leq(anchor, nxt, a), {"clause": "ii", "codes": _codes(sn, a)})
    # Lex(L) ⊊* Lex(L') for valid L ⊊* L' with |L'| <= 4
    small = [linord.LinearOrdering.from_carrier(hf.decode(c)) for c in range(p["mono_code_max"])
             if linord.validate(hf.decode(c))]
    small = [lo for lo in small if len(lo) <= 4]
    for a, b in itertools.product(small, repeat=2):
        if linord.is_proper_initial_segment(a, b):
            g_mono.check(linord.is_proper_initial_segment(lex_step(a), lex_step(b)),
                         {"codes": _codes(a.carrier, b.carrier)})
    for j in range(p["lex_terms"]):
        g_lexack.check(lex_term(j) == ack_term(lex_size(j)), {"j": j})
    for k in range(p["ack_terms"]):
        lo = ack_term(k)
        g_trans.check(hf.is_transitive(lo.field), {"k": k})
        nxt = ack_successor(lo)
        g_succ.check(not isinstance(nxt, DontCare) and nxt == ack_term(k + 1), {"k": k})
    return [g_code, g_thm, g_mono, g_lexack, g_trans, g_succ]


def suite_ch_lex_measures(p: dict, rng: random.Random) -> list[Group]:
    g_iso, g_chack = Group("ch-lex"), Group("ch-ack-suplog")
    for k in range(p["ch_terms"] + 1):
        number = SystemNumber(CH, tuple(CH.terms(k)))
        lex_num = ch_lex(number)
        ok = len(lex_num) == k and lex_ch(lex_num).terms == number.terms
        ok = ok and all(lo == lex_term(i) for i, lo in enumerate(lex_num.terms))
        g_iso.check(ok, {"k": k})
    for size in range(p["ack_numbers"] + 1):
        number = SystemNumber(ACK, tuple(ACK.terms(size)))
        out = ack_to_ch_suplog(number)
        g_chack.check(len(out) >= ca.suplog2(size), {"size": size})
    return [g_iso, g_chack]


def suite_ack_closure(p: dict, rng: random.Random) -> list[Group]:
    """With ``L_k ⊆* l_n ⊊* L_{k+1}``, the number ending at ``L_{k+3}`` is
    longer than ``2**|[l_0..l_n]|``.
    """
    g, g_lex = Group("witness"), Group("lex-terms-are-ack-terms")
    for j in range(min(p["k_max"] + 3, p["materialize_max"]) + 1):
        g_lex.check(lex_term(j) == ack_term(lex_size(j)), {"j": j})
    for k in range(p["k_max"] + 1):
        target = lex_size(k + 3) + 1   # [l_0, ..., l_{|L_{k+3}|}]
        for n in range(lex_size(k), lex_size(k + 1)):
            number = SystemNumber(ACK, tuple(ACK.terms(n + 1)))
            anchored = linord.is_initial_segment(lex_term(k), number.terms[-1]) and \
                linord.is_proper_initial_segment(number.terms[-1], lex_term(k + 1))
            g.check(anchored and target > 2 ** len(number), {"k": k, "n": n})
    return [g_lex, g]


def suite_ack_phi(p: dict, rng: random.Random) -> list[Group]:
    g_reg, g_stage, g_gamma, g_succ = Group("regularity"), Group("stages"), Group("gamma"), Group("successor")
    for name in p["phis"]:
        fn = PHIS[name]
        K = p["K"][name]
        g_reg.check(is_regular(fn, K, p["probe_bound"]), {"phi": name, "K": K})
        sys, plan = ack_phi(name, K)
        g_stage.check(all(fn(x) < ca.tower2(plan.N) for x in range(K + 1))
                      and (plan.N == 0 or max(fn(x) for x in range(K + 1)) >= ca.tower2(plan.N - 1)),
                      {"phi": name, "N": plan.N})
        h = ca.tower2(plan.N)
        for n in range(p["stages"] + 1):
            st = plan.stage(n)
            if n == 0:
                g_stage.check(st.h == h and st.start_level is None, {"phi": name, "n": n})
            else:
                prev, h = h, fn(h)
                g_stage.check(st.h == h and st.count == h - prev and st.start_level == plan.N + n - 1,
                              {"phi": name, "n": n})
            if n < p["stages"]:
                g_stage.check(plan.clause_ok(n), {"phi": name, "n": n, "clause": "ii"})
        # gamma: every m up to a cap, plus the edges of each stage
        top = plan.h(min(2, p["stages"]))
        ms = set(range(min(top, p["gamma_max"]) + 1))
        for n in range(p["stages"] + 1):
            ms.update(x for x in (plan.h(n) - 1, plan.h(n), plan.h(n) + 1) if x >= 0)
        for m in sorted(ms):
            gam = closure_witness_gamma(plan, m)
            g_gamma.check(fn(m) <= gam.size, {"phi": name, "m": m})
        if plan.h(2) <= p["succ_max"]:
            for i in plan.stage_indices(1):
                g_succ.check(sys.successor(i) == defined_successor(plan, i), {"phi": name, "i": i})
    return [g_reg, g_stage, g_gamma, g_succ]


def suite_one_point_induction(p: dict, rng: random.Random) -> list[Group]:
    g = Group("schema")
    premised = 0
    for _ in range(p["samples"]):
        s = hf.decode(rng.randrange(p["code_max"]))
        subsets = list(hf.power_set(s))
        if rng.random() < 0.5:
            # close a random seed family under one-point extension
            fam = {EMPTY} | set(rng.sample(subsets, rng.randrange(len(subsets) + 1)))
            frontier = list(fam)
            while frontier:
                x = frontier.pop()
                for y in s:
                    z = hf.adjoin(x, y)
                    if z not in fam:
                        fam.add(z)
                        frontier.append(z)
        else:
            fam = set(rng.sample(subsets, rng.randrange(len(subsets) + 1)))
        t = hf.make(fam)
        prem = EMPTY in t and all(hf.adjoin(x, y) in t for x in t for y in s)
        premised += prem
        g.check(not prem or s in t, {"codes": _codes(s, t)})
    g.name = f"schema ({premised} with premises)"
    return [g]


SUITES: dict[str, Callable[[dict, random.Random], list[Group]]] = {
    "kuratowski": suite_kuratowski,
    "induction-recursion": suite_induction_recursion,
    "splitting": suite_splitting,
    "bounding": suite_bounding,
    "rank": suite_rank,
    "numeral-base": suite_numeral_base,
    "numeral-length": suite_numeral_length,
    "lex-ack": suite_lex_ack,
    "ch-lex-measures": suite_ch_lex_measures,
    "ack-closure": suite_ack_closure,
    "ack-phi": suite_ack_phi,
    "one-point-induction": suite_one_point_induction,
}

SUITE_DEFAULTS: dict[str, dict] = {
    "kuratowski": {"code_max": 1 << 16, "samples": 10_000, "max_len": 8, "term_code_max": 1 << 12},
    "induction-recursion": {"samples": 2000, "max_len": 8, "term_code_max": 1 << 10},
    "splitting": {"code_max": 1 << 16, "levels": [0, 1, 2], "max_term": 5},
    "bounding": {"envs": 100, "code_max": 1 << 12, "fan_tc_max": 16},
    "rank": {"code_max": 1 << 12, "exact_code_max": 1 << 10, "envs": 100, "env_code_max": 1 << 12, "fan_tc_max": 16},
    "numeral-base": {"systems": ["vn", "z", "ch"], "base_sizes": [2, 3, 4], "max_terms": 256},
    "numeral-length": {"systems": ["len:vn:2", "len:vn:3", "len:z:2", "len:z:3", "len:ch:3"], "max_terms": 64},
    "lex-ack": {"code_order_max": 1024, "field_max": 4, "mono_code_max": 1 << 16, "lex_terms": 5, "ack_terms": 64},
    "ch-lex-measures": {"ch_terms": 5, "ack_numbers": 20},
    "ack-closure": {"k_max": 2, "materialize_max": 4},
    "ack-phi": {"phis": ["double", "square"], "K": {"double": 1, "square": 4}, "stages": 3,
                "probe_bound": 64, "gamma_max": 4096, "succ_max": 4096},
    "one-point-induction": {"samples": 500, "code_max": 1 << 12},
}


def run_suite(name: str, budget: dict | None = None, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise HFError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    lim, params = split_budget(dict(budget or {}))
    unknown = set(params) - set(SUITE_DEFAULTS[name])
    if unknown:
        raise HFError(f"unknown budget keys for {name}: {sorted(unknown)}")
    merged = {**SUITE_DEFAULTS[name], **params}
    rng = random.Random(seed)
    t0 = time.perf_counter()
    with limits(**lim):
        groups = SUITES[name](merged, rng)
    wall = time.perf_counter() - t0
    failures = []
    records = []
    for g in groups:
        fails = _minimize(g.failures)
        failures.extend({"group": g.name, **(f if isinstance(f, dict) else {"case": f})} for f in fails)
        records.append({"record": "group", "suite": name, "group": g.name, "cases": g.cases,
                        "failures": len(g.failures), "counterexamples": fails})
    return SuiteReport(name, sum(g.cases for g in groups), failures, {**merged, **lim}, seed, wall, records)
