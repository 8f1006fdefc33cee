"""Acceptance suite: one test per exit criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

One criterion is known-red and documented as such: the strict zero-or-one
step simulation of ld steps through the CPS translation
(``test_single_step_star_strict``).  Steps that turn a nonvalue into a
value inside a bindable frame provably need a three-step beta-eta chain
after translation (minimal instance ``^(^($(x))) -> ^(x)``), so a 100%
pass rate is unattainable; the multi-step simulation does hold on every
sampled instance.  The remaining criteria all pass.
"""

import time
from collections import Counter

from conftest import lam as plam, ld as pld, lamd as plamd
from ldot.engine import DEFAULT_FUEL, Fuel, reaches, reduce, replay_ok
from ldot.props import (
    GenConfig,
    check_confluence_sample,
    check_cps_equivalence,
    check_helper_lemmas,
    check_iota_pi,
    check_left_post_inverse,
    check_right_inverse,
    check_single_step_hash,
    check_single_step_star,
    check_subst_lemmas,
)
from ldot.rules import redexes
from ldot.terms import Var, alpha_eq, subst
from ldot.translate import cps_ld, cps_star, ds_hash

CPS_OF_IDENTITY = r"\k1. k1 (\x. \k2. k2 x)"
S_DIRECT = r"\x y z. x y (y z)"
S_CPS = r"\k1. k1 (\x k2. k2 (\y k3. k3 (\z k4. x y (\f. (\k5. y z (\a. f a k5)) k4))))"
S_BACK = r"\x y z. S0 k4. (\f. (\k5. (\a. k5 $ f a) $ y z) k4) $ x y"


def _criterion(name: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_evaluation_example_trace():
    term = subst(plamd("I $ I (S0 f. f (f z))"), plamd(r"\x. x"), "I")
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        tr = reduce(term, "lamd")
        best = min(best, time.perf_counter() - t0)
    got = Counter(tr.rules())
    ok = (
        tr.status == "complete"
        and tr.final == Var("z")
        and got == {"dollar_slash_shift": 1, "beta_v": 6, "dollar_v": 2}
        and replay_ok(tr, "lamd")
        and best < 0.010
    )
    _criterion(
        "evaluation example reduces to z with the published rule multiset",
        ok,
        f"{dict(got)}, {best * 1000:.2f} ms",
    )


def test_cps_of_identity():
    expected = plam(CPS_OF_IDENTITY)
    ok = alpha_eq(cps_ld(plamd(r"\x. x")), expected) and alpha_eq(
        cps_star(pld(r"\x. x")), expected
    )
    _criterion("CPS of the identity matches the published term on both routes", ok)


def test_reflection_of_identity_cps():
    ok = alpha_eq(ds_hash(plam(CPS_OF_IDENTITY)), pld(r"\x. x"))
    _criterion("direct-style reflection of the identity CPS term", ok)


def test_s_combinator():
    s = pld(S_DIRECT)
    star_ok = alpha_eq(cps_star(s), plam(S_CPS))
    hash_ok = alpha_eq(ds_hash(plam(S_CPS)), pld(S_BACK))
    res = reaches(s, pld(S_BACK), "ld", Fuel(100, DEFAULT_FUEL.max_frontier))
    ok = star_ok and hash_ok and res.found and replay_ok(res.trace, "ld")
    _criterion(
        "S-combinator CPS, reflection, and reachability of the reflected form",
        ok,
        f"witness rules: {res.trace.rules() if res.found else None}",
    )


def test_right_inverse_1000():
    t0 = time.perf_counter()
    rep = check_right_inverse(GenConfig(max_size=12, seed=42), trials=1000)
    dt = time.perf_counter() - t0
    ok = rep.passes == 1000 and rep.fuel_exhaustions == 0 and dt < 5.0
    _criterion("right inverse: 1000/1000 exact, no fuel", ok, f"{dt:.2f} s")


def test_left_post_inverse_500():
    t0 = time.perf_counter()
    rep = check_left_post_inverse(GenConfig(max_size=10, seed=42), trials=500)
    dt = time.perf_counter() - t0
    ok = rep.ok and rep.fuel_exhaustions < 25 and dt < 30.0
    _criterion(
        "left post-inverse: 500 trials, no refutations, exhaustion < 5%",
        ok,
        f"{rep.fuel_exhaustions} exhausted, {dt:.2f} s",
    )


def test_single_step_star_strict():
    t0 = time.perf_counter()
    rep = check_single_step_star(GenConfig(max_size=10, seed=42), trials=500)
    dt = time.perf_counter() - t0
    ok = rep.passes == rep.trials and dt < 10.0
    _criterion(
        "single-step simulation through CPS, strict zero-or-one contract",
        ok,
        f"{rep.passes}/{rep.trials} strict; the violations are value-crossing "
        f"steps needing a fixed 3-step chain; {dt:.2f} s",
    )


def test_single_step_hash_300():
    rep = check_single_step_hash(GenConfig(max_size=10, seed=42), trials=300)
    ok = rep.ok and rep.fuel_exhaustions < 15
    _criterion("single-step simulation by direct style: 300 trials", ok)


def test_subst_300():
    rep = check_subst_lemmas(GenConfig(max_size=10, seed=42), trials=300)
    ok = rep.ok and rep.fuel_exhaustions < 15
    _criterion("substitution lemmas: 300 trials", ok)


def test_helpers_300():
    rep = check_helper_lemmas(GenConfig(max_size=8, seed=42), trials=300)
    ok = rep.ok and rep.fuel_exhaustions < 15
    _criterion("helper lemmas: 300 trials", ok, f"{rep.fuel_exhaustions} exhausted")


def test_cps_equivalence_300():
    rep = check_cps_equivalence(GenConfig(max_size=8, seed=42), trials=300)
    ok = rep.ok and rep.fuel_exhaustions < 15
    _criterion("both CPS routes beta-eta equal: 300 trials", ok)


def test_confluence_300():
    rep = check_confluence_sample(GenConfig(max_size=8, seed=42), trials=300)
    ok = rep.ok
    _criterion(
        "confluence sample: 300 terms, all reduct pairs rejoin",
        ok,
        f"{rep.fuel_exhaustions} exhausted (exhaustions are inconclusive, not refutations)",
    )


def test_iota_pi_200():
    rep = check_iota_pi(GenConfig(max_size=8, seed=42), trials=200)
    ok = rep.ok and rep.fuel_exhaustions < 30
    _criterion(
        "embedding/projection inverses and axiom soundness: 200 trials",
        ok,
        f"{rep.fuel_exhaustions} exhausted (< 15% allowed)",
    )


def test_exhaustive_micro_oracle():
    from test_rules import enumerate_ld_terms, nominal_redexes
    from ldot.rules import AppL, AppR, ThawJ, apply_redex, bind_decompose
    from ldot.terms import App, Thaw, is_value

    t0 = time.perf_counter()
    count = 0
    for t in enumerate_ld_terms(5):
        count += 1
        mine = sorted(
            ((r.path, r.rule, apply_redex(t, r)) for r in redexes(t, "ld")),
            key=lambda x: (x[0], x[1]),
        )
        theirs = sorted(nominal_redexes(t), key=lambda x: (x[0], x[1]))
        assert len(mine) == len(theirs), t
        assert all(
            p1 == p2 and r1 == r2 and alpha_eq(c1, c2)
            for (p1, r1, c1), (p2, r2, c2) in zip(mine, theirs)
        ), t
        # uniqueness of the legal naming decomposition, by brute force
        candidates = []
        match t:
            case App(f, a):
                if not is_value(f, "ld"):
                    candidates.append((AppL(a), f))
                if is_value(f, "ld") and not is_value(a, "ld"):
                    candidates.append((AppR(f), a))
            case Thaw(b):
                if not is_value(b, "ld"):
                    candidates.append((ThawJ(), b))
        assert len(candidates) <= 1
        assert bind_decompose(t) == (candidates[0] if candidates else None)
    dt = time.perf_counter() - t0
    ok = count > 300 and dt < 10.0
    _criterion(
        "exhaustive micro-oracle over all small terms",
        ok,
        f"{count} terms, {dt:.2f} s",
    )
